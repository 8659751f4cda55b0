#include "invconn/lie.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace invconn {

Mat3 hat(const Vec3& v) {
  return {{0.0, -v.z(), v.y()}, {v.z(), 0.0, -v.x()}, {-v.y(), v.x(), 0.0}};
}

Vec3 unhat(const Mat3& m, const ToleranceConfig& cfg) {
  const double sym = (m + m.transpose()).max_abs();
  if (!m.is_finite() || sym > cfg.eps_sym) {
    throw Error(ErrorCode::NonAntisymmetric,
                "matrix is not antisymmetric: max|M + M^T| = " + std::to_string(sym));
  }
  return {0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)), 0.5 * (m(1, 0) - m(0, 1))};
}

C2x2 sigma(const Vec3& v) {
  using C = std::complex<double>;
  return {C(0.0, v.x()), C(-v.y(), v.z()), C(v.y(), v.z()), C(0.0, -v.x())};
}

Vec3 sigma_inv(const C2x2& x, const ToleranceConfig& cfg) {
  // Traceless anti-Hermitian 2x2 matrices are exactly the image of sigma.
  const double tr = std::abs(x.trace());
  const double herm = (x + x.adjoint()).max_abs();
  if (!(tr <= cfg.eps_sym) || !(herm <= cfg.eps_sym)) {
    throw Error(ErrorCode::NotInAlgebra, "matrix is not a traceless anti-Hermitian 2x2 matrix");
  }
  const double xx = 0.5 * (x(0, 0).imag() - x(1, 1).imag());
  const double yy = 0.5 * (x(1, 0).real() - x(0, 1).real());
  const double zz = 0.5 * (x(1, 0).imag() + x(0, 1).imag());
  return {xx, yy, zz};
}

Vec3 adjoint(const SU2Element& a, const Vec3& v) {
  const C2x2 g = a.matrix();
  return sigma_inv(g * sigma(v) * g.adjoint(), ToleranceConfig{.eps_sym = 1e-8});
}

SO3Element covering_rho(const SU2Element& a) {
  return SO3Element::unchecked(
      Mat3::from_columns(adjoint(a, Vec3::unit(0)), adjoint(a, Vec3::unit(1)), adjoint(a, Vec3::unit(2))));
}

Mat3 rho_star(const Vec3& u) {
  const C2x2 su = sigma(u);
  Mat3 out;
  for (std::size_t j = 0; j < 3; ++j) {
    const C2x2 sv = sigma(Vec3::unit(j));
    out.set_col(j, sigma_inv(su * sv - sv * su, ToleranceConfig{.eps_sym = 1e-8}));
  }
  return out;
}

SU2Element su2_exp(const Vec3& u, double t) {
  // σ(u)² = −|u|²·1
  const double n = u.norm();
  if (n == 0.0) return SU2Element{};
  const double angle = n * t;
  const double s = std::sin(angle) / n;
  return SU2Element::normalized(std::cos(angle), s * u.x(), s * u.y(), s * u.z());
}

SO3Element x_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return SO3Element::unchecked({{1.0, 0.0, 0.0}, {0.0, c, -s}, {0.0, s, c}});
}

SU2Element mu_n(int n, const U1Element& h) {
  // diag(e^{−iφ}, e^{iφ}) = cos φ·1 − sin φ·σ(e1)
  const double phi = canonical_angle(static_cast<double>(n) * h.theta());
  return SU2Element::normalized(std::cos(phi), -std::sin(phi), 0.0, 0.0);
}

SO3Element lambda_axial(AxialSign sign, const U1Element& h) {
  return x_rotation(sign == AxialSign::Plus ? h.theta() : -h.theta());
}

SU2Element weyl_element() { return SU2Element::from(0.0, 0.0, 1.0, 0.0); }

bool mu_conjugate(int n, int m) { return std::abs(n) == std::abs(m); }

}  // namespace invconn
