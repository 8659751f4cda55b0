#include "invconn/types.hpp"

#include <algorithm>
#include <string>

namespace invconn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NonAntisymmetric: return "NonAntisymmetric";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::InvalidLift: return "InvalidLift";
    case ErrorCode::NotTraceless: return "NotTraceless";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotInSolutionSpace: return "NotInSolutionSpace";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void ToleranceConfig::validate() const {
  if (!(eps_sym > 0.0) || !(eps_rank > 0.0) || !(eps_eq > 0.0) || !(eps_recon > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
  }
}

bool Vec3::is_finite() const {
  return std::all_of(v_.begin(), v_.end(), [](double x) { return std::isfinite(x); });
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 m;
  m.set_col(0, c0);
  m.set_col(1, c1);
  m.set_col(2, c2);
  return m;
}

Mat3 Mat3::outer(const Vec3& u, const Vec3& v) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = u[r] * v[c];
  return m;
}

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Mat3::det() const {
  const auto& a = a_;
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
         a[2] * (a[3] * a[7] - a[4] * a[6]);
}

double Mat3::frobenius() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

double Mat3::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool Mat3::is_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](double x) { return std::isfinite(x); });
}

Mat3& Mat3::operator+=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) a_[i] += o.a_[i];
  return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat3& Mat3::operator*=(double s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 p;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return p;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a(0, 0) * v[0] + a(0, 1) * v[1] + a(0, 2) * v[2],
          a(1, 0) * v[0] + a(1, 1) * v[1] + a(1, 2) * v[2],
          a(2, 0) * v[0] + a(2, 1) * v[1] + a(2, 2) * v[2]};
}

Sym3 Sym3::from(const Mat3& m, double eps_sym) {
  if (!m.is_finite()) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  const double asym = (m - m.transpose()).max_abs();
  if (asym > eps_sym) {
    throw Error(ErrorCode::NonSymmetric,
                "matrix is not symmetric: max|M - M^T| = " + std::to_string(asym));
  }
  return symmetrized(m);
}

Sym3 Sym3::symmetrized(const Mat3& m) { return Sym3(0.5 * (m + m.transpose())); }

C2x2 C2x2::adjoint() const { return {std::conj(a_[0]), std::conj(a_[2]), std::conj(a_[1]), std::conj(a_[3])}; }

double C2x2::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

C2x2& C2x2::operator+=(const C2x2& o) {
  for (std::size_t i = 0; i < 4; ++i) a_[i] += o.a_[i];
  return *this;
}

C2x2& C2x2::operator-=(const C2x2& o) {
  for (std::size_t i = 0; i < 4; ++i) a_[i] -= o.a_[i];
  return *this;
}

C2x2& C2x2::operator*=(value_type s) {
  for (auto& z : a_) z *= s;
  return *this;
}

C2x2 operator*(const C2x2& a, const C2x2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

SO3Element SO3Element::from(const Mat3& m, double tol) {
  if (!m.is_finite()) throw Error(ErrorCode::InvalidArgument, "rotation has non-finite entries");
  const double orth = (m.transpose() * m - Mat3::identity()).max_abs();
  const double det = m.det();
  if (orth > tol || std::abs(det - 1.0) > tol) {
    throw Error(ErrorCode::InvalidArgument, "matrix is not in SO(3)");
  }
  return SO3Element(m);
}

SU2Element SU2Element::from(double w, double x, double y, double z) {
  const double n2 = w * w + x * x + y * y + z * z;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "quaternion is not a unit quaternion");
  }
  return SU2Element({w, x, y, z});
}

SU2Element SU2Element::normalized(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero quaternion");
  }
  return SU2Element({w / n, x / n, y / n, z / n});
}

SU2Element SU2Element::from_matrix(const C2x2& m) {
  return SU2Element({m(0, 0).real(), m(0, 0).imag(), m(1, 0).real(), m(1, 0).imag()});
}

C2x2 SU2Element::matrix() const {
  using C = std::complex<double>;
  const auto [w, x, y, z] = q_;
  return {C(w, x), C(-y, z), C(y, z), C(w, -x)};
}

SU2Element operator*(const SU2Element& a, const SU2Element& b) {
  return SU2Element::from_matrix(a.matrix() * b.matrix());
}

double canonical_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

U1Element::U1Element(double theta) : theta_(canonical_angle(theta)) {}

}  // namespace invconn
