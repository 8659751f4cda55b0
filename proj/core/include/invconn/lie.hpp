#pragma once

#include "invconn/types.hpp"

namespace invconn {

enum class AxialSign { Plus, Minus };

/// ℝ³ → so(3): (x, y, z) ↦ [[0, −z, y], [z, 0, −x], [−y, x, 0]], so that
/// hat(u)·w = u × w.
Mat3 hat(const Vec3& v);
// Inverse of hat. Throws NonAntisymmetric if max|M + Mᵀ| > eps_sym.
Vec3 unhat(const Mat3& m, const ToleranceConfig& cfg = {});

/// ℝ³ → su(2): (x, y, z) ↦ [[ix, −y + iz], [y + iz, −ix]].
///
/// This realization is not the normalized Pauli basis: [σ(e1), σ(e2)] = −2σ(e3),
/// which is where the factor −2 in rho_star comes from.
C2x2 sigma(const Vec3& v);
// Throws NotInAlgebra unless X is traceless and anti-Hermitian within eps_sym.
Vec3 sigma_inv(const C2x2& x, const ToleranceConfig& cfg = {});

// Ad_a in σ-coordinates: sigma_inv(a·σ(v)·a⁻¹).
Vec3 adjoint(const SU2Element& a, const Vec3& v);

// Double cover SU(2) → SO(3); column i is adjoint(a, eᵢ).
SO3Element covering_rho(const SU2Element& a);

// Differential of covering_rho at the identity, input in σ-coordinates.
// Column j is sigma_inv([σ(u), σ(eⱼ)]); equals hat(−2u).
Mat3 rho_star(const Vec3& u);

// exp(t·σ(u)) ∈ SU(2). Used for finite-difference checks of rho_star.
SU2Element su2_exp(const Vec3& u, double t);

// Rotation by `angle` about the x axis, blockdiag(1, R₂(angle)).
SO3Element x_rotation(double angle);

// U(1) → SU(2), e^{iθ} ↦ diag(e^{−inθ}, e^{inθ}). The angle n·θ is reduced
// mod 2π before evaluation.
SU2Element mu_n(int n, const U1Element& h);

// U(1) → SO(3), e^{iθ} ↦ x_rotation(±θ).
SO3Element lambda_axial(AxialSign sign, const U1Element& h);

// σ(e2) as a group element; conjugation by it sends mu_n to mu_{-n}.
SU2Element weyl_element();

// Whether mu_n and mu_m are conjugate in SU(2) (true iff |n| == |m|).
bool mu_conjugate(int n, int m);

}  // namespace invconn
