#pragma once

#include <array>
#include <cstdint>

#include "invconn/numerics.hpp"
#include "invconn/types.hpp"
#include "invconn/wang.hpp"

namespace invconn {

// Which semidefinite cone the canonical representative lives in. Boundary
// points (numeric rank < 3) belong to both cones, with P ∼ −P.
enum class CanonicalSign { Plus, Minus, Boundary };

std::string_view to_string(CanonicalSign s) noexcept;

/// Canonical representative of an SO(3) left-multiplication orbit in M(3,ℝ).
///
/// The orbit of M is sgn(det M)·√(MᵀM). The PSD factor is stored in p_psd and
/// the sign separately, so Minus stands for the negative definite matrix
/// −p_psd.
struct BianchiCanonical {
  Sym3 p_psd;
  CanonicalSign sign = CanonicalSign::Boundary;
};

// Global chart coordinates (A, λ) ∈ Sym₀(ℝ³) × ℝ.
struct ChartPoint {
  Sym3 a;
  double lambda = 0.0;

  // Throws NotSymmetric / NotTraceless.
  static ChartPoint from(const Mat3& a, double lambda, const ToleranceConfig& cfg = {});
};

// Strata S₀ ⊂ S₁ ⊂ S₂ ⊂ S₃; index is the smallest n containing the point.
struct Stratum {
  int index = 3;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct StratumReport {
  Stratum stratum;
  // 27·det(A)² + 4·e2(A)³, zero exactly when A has a repeated eigenvalue.
  double discriminant = 0.0;
  bool discriminant_s1 = false;
  bool spectral_s1 = false;
  std::array<double, 3> spectrum{};
};

struct AxialModulus {
  double a = 0.0;
  double r = 0.0;
};

struct AxialSU2Modulus {
  int n = 0;
  double c = 0.0;
};

class NotEquivariantError : public Error {
 public:
  NotEquivariantError(double residual, const Mat3& witness);
  double residual() const { return residual_; }
  const Mat3& witness() const { return witness_; }

 private:
  double residual_;
  Mat3 witness_;
};

// ---- Bianchi (trivial isotropy) -------------------------------------------

BianchiCanonical bianchi_canonical(const Mat3& m, const ToleranceConfig& cfg = {});

// φ₊(P) = (P − ⅓tr(P)·I, λ_P) for P ⪰ 0, λ_P the smallest-modulus eigenvalue,
// snapped to 0 on the boundary.
ChartPoint phi_plus(const Sym3& psd, const ToleranceConfig& cfg = {});
// φ₋(P) = (−P + ⅓tr(P)·I, λ_P) for P ⪯ 0.
ChartPoint phi_minus(const Sym3& nsd, const ToleranceConfig& cfg = {});

ChartPoint bianchi_chart(const BianchiCanonical& c, const ToleranceConfig& cfg = {});
BianchiCanonical bianchi_chart_inv(const ChartPoint& p, const ToleranceConfig& cfg = {});

// Composite M ↦ φ(π(M)).
ChartPoint bianchi_coordinates(const Mat3& m, const ToleranceConfig& cfg = {});

Stratum classify_stratum(const ChartPoint& p, const ToleranceConfig& cfg = {});
StratumReport diagnose_stratum(const ChartPoint& p, const ToleranceConfig& cfg = {});

// Largest componentwise difference between two chart points.
double chart_distance(const ChartPoint& p, const ChartPoint& q);

bool bianchi_equiv(const Mat3& m, const Mat3& n, const ToleranceConfig& cfg = {});

// Matrix of ρ*∘Λ under the hat/σ identifications: −2·Λ.
Mat3 su2_to_so3_class(const Mat3& lambda_su2);

// ---- axial (U(1) isotropy) ------------------------------------------------

// (a, b, c) are the coordinates of blockdiag(a, [[b, −c], [c, b]]).
AxialModulus axial_canonical(double a, double b, double c);
// Same, reading (a, b, c) off a matrix; throws NotInSolutionSpace if the matrix
// is not of that form within eps_eq.
AxialModulus axial_canonical(const Mat3& lambda, const ToleranceConfig& cfg = {});

// Gauge action of the axial gauge group SO(2): left multiplication by
// x_rotation(theta).
Mat3 axial_gauge(double theta, const Mat3& lambda);

AxialSU2Modulus axial_su2_modulus(int n, const Mat3& lambda, const ToleranceConfig& cfg = {});

// ---- isotropic (SO(3) isotropy) -------------------------------------------

// Throws NotEquivariantError carrying the residual and a witness rotation.
double iso_modulus(const Mat3& lambda, const ToleranceConfig& cfg = {});

// ---- S₁ sextic ------------------------------------------------------------

// 4t⁶ + 12t⁵ − 3t⁴ − 26t³ − 3t² + 12t + 4, highest degree first.
inline constexpr std::array<std::int64_t, 7> kS1Sextic{4, 12, -3, -26, -3, 12, 4};

// Expansion of 4(t − 1)²(t + 2)²(t + ½)² = (t − 1)²(t + 2)²(2t + 1)².
std::array<std::int64_t, 7> sextic_from_double_roots();

// Coefficients match the double-root expansion and t ∈ {1, −2, −½} are roots
// of both the sextic and its derivative.
bool verify_s1_sextic();

}  // namespace invconn
