#pragma once

#include <string>
#include <vector>

#include "invconn/lie.hpp"
#include "invconn/types.hpp"

namespace invconn {

/// Isotropy group H of the base point: trivial (Bianchi), U(1) embedded
/// through λ± (axial), or SO(3) with λ = id (isotropic).
struct IsotropyClass {
  enum class Kind { Bianchi, Axial, Isotropic };

  Kind kind = Kind::Bianchi;
  AxialSign sign = AxialSign::Plus;  // meaningful for Axial only

  static IsotropyClass bianchi() { return {Kind::Bianchi, AxialSign::Plus}; }
  static IsotropyClass axial(AxialSign s) { return {Kind::Axial, s}; }
  static IsotropyClass isotropic() { return {Kind::Isotropic, AxialSign::Plus}; }

  friend bool operator==(const IsotropyClass&, const IsotropyClass&) = default;
};

/// Target of the connection: metric-compatible (so(3)-valued, Ad through
/// λ itself) or an SU(2) lift with isotropy homomorphism μₙ.
struct LiftSpec {
  enum class Flavor { MetricCompatible, SU2Lift };

  Flavor flavor = Flavor::MetricCompatible;
  int n = 0;

  static LiftSpec metric() { return {Flavor::MetricCompatible, 0}; }
  static LiftSpec su2(int n) { return {Flavor::SU2Lift, n}; }

  friend bool operator==(const LiftSpec&, const LiftSpec&) = default;
};

std::string describe(const IsotropyClass& iso);
std::string describe(const LiftSpec& lift);

// Throws InvalidLift for SU2Lift(n != 0) on Bianchi or Isotropic.
void validate(const IsotropyClass& iso, const LiftSpec& lift);

struct WangParameter {
  Mat3 lambda;  // Λ in ℝ³ coordinates (hat for so(3), σ for su(2))
  IsotropyClass isotropy;
  LiftSpec lift;
};

// One equivariance constraint Λ·source = target·Λ.
struct ConstraintPair {
  Mat3 source;  // λ(h)
  Mat3 target;  // Ad_{λ(h)} or Ad_{μ(h)} in ℝ³ coordinates
};

// Number of equispaced angles used for U(1) constraints with lift index n.
int axial_grid_size(int n);

/// The deterministic constraint set for (iso, lift):
///  - Bianchi: empty;
///  - Axial: θ = 2πk/N, k < N, N = axial_grid_size(n);
///  - Isotropic: the three quarter turns about the axes plus 50 seeded Haar
///    rotations.
std::vector<ConstraintPair> constraint_set(const IsotropyClass& iso, const LiftSpec& lift);

struct ResidualReport {
  double residual = 0.0;
  Mat3 witness;  // λ(h) attaining the maximum
};

// max over the constraint set of ‖Λ·λ(h) − Ad(h)·Λ‖_F; 0 for Bianchi.
double equivariance_residual(const WangParameter& p);
ResidualReport equivariance_report(const WangParameter& p);

struct EquivariantBasis {
  int dimension = 0;
  std::vector<Mat3> basis;  // Frobenius-orthonormal

  // Frobenius distance from m to the span of the basis.
  double distance(const Mat3& m) const;
  Mat3 project(const Mat3& m) const;
};

/// Solution space of the equivariance constraints as a subspace of the
/// 9-dimensional space of Λ.
///
/// The constraints are stacked into a 9×9 Gram matrix whose eigenvalues at or
/// below eps_rank·(largest eigenvalue) span the nullspace. The nullspace basis
/// is then brought to reduced row-echelon form (row-major entry order) and
/// orthonormalized, so the output is deterministic and reads off directly,
/// e.g. I/√3 for the isotropic metric-compatible case.
EquivariantBasis solve_equivariant_basis(const IsotropyClass& iso, const LiftSpec& lift,
                                         const ToleranceConfig& cfg = {});

}  // namespace invconn
