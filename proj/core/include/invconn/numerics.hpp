#pragma once

#include <array>

#include "invconn/types.hpp"

namespace invconn {

struct EigenSystem {
  std::array<double, 3> values{};  // ascending
  Mat3 vectors;                    // orthonormal eigenvectors in columns

  Mat3 reconstruct() const;
};

/// Coefficients of the characteristic polynomial t³ − trace·t² + e2·t − det.
struct CharInvariants {
  double trace = 0.0;
  double e2 = 0.0;  // second elementary symmetric function of the eigenvalues
  double det = 0.0;
};

struct Svd3 {
  Mat3 u;                    // orthonormal, det may be ±1
  std::array<double, 3> s{};  // descending, nonnegative
  Mat3 v;                    // orthonormal, det may be ±1
};

// √(MᵀM) together with the singular values of M (ascending).
struct PolarFactor {
  Sym3 p;
  std::array<double, 3> singular_values{};
};

struct ProcrustesResult {
  SO3Element rotation;
  double residual = 0.0;  // ‖R·M − N‖_F
};

EigenSystem sym_eigen(const Sym3& s);
// Validates symmetry first; throws NonSymmetric.
EigenSystem sym_eigen(const Mat3& m, const ToleranceConfig& cfg = {});

// √(MᵀM), the positive semidefinite polar factor of M.
Sym3 psd_sqrt_factor(const Mat3& m);
PolarFactor polar_psd(const Mat3& m);

CharInvariants char_invariants(const Mat3& m);

Svd3 svd(const Mat3& m);

// Number of singular values above eps_rank·max(1, σ_max).
int numeric_rank(const Mat3& m, const ToleranceConfig& cfg = {});

/// The rotation R ∈ SO(3) minimizing ‖R·M − N‖_F.
///
/// With N·Mᵀ = U·S·Vᵀ the minimizer is U·diag(1, 1, det(U·Vᵀ))·Vᵀ; this stays
/// a minimizer when N·Mᵀ is rank deficient, so no special cases are needed.
ProcrustesResult procrustes_align(const Mat3& m, const Mat3& n);

}  // namespace invconn
