#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "invconn/error.hpp"

namespace invconn {

/// Numerical thresholds shared by every module.
///
/// eps_sym    absolute symmetry / antisymmetry / algebra-membership tolerance
/// eps_rank   relative threshold for numeric rank and nullspace detection
/// eps_eq     relative tolerance for equality of canonical forms
/// eps_recon  relative reconstruction tolerance for factorizations
struct ToleranceConfig {
  double eps_sym = 1e-10;
  double eps_rank = 1e-9;
  double eps_eq = 1e-8;
  double eps_recon = 1e-10;

  // Throws InvalidArgument unless every threshold is strictly positive.
  void validate() const;
};

class Vec3 {
 public:
  constexpr Vec3() = default;
  constexpr Vec3(double x, double y, double z) : v_{x, y, z} {}

  static constexpr Vec3 unit(std::size_t i) {
    Vec3 e;
    e.v_[i] = 1.0;
    return e;
  }

  constexpr double& operator[](std::size_t i) { return v_[i]; }
  constexpr double operator[](std::size_t i) const { return v_[i]; }

  constexpr double x() const { return v_[0]; }
  constexpr double y() const { return v_[1]; }
  constexpr double z() const { return v_[2]; }

  double norm() const { return std::sqrt(dot(*this)); }
  constexpr double dot(const Vec3& o) const {
    return v_[0] * o.v_[0] + v_[1] * o.v_[1] + v_[2] * o.v_[2];
  }
  constexpr Vec3 cross(const Vec3& o) const {
    return {v_[1] * o.v_[2] - v_[2] * o.v_[1], v_[2] * o.v_[0] - v_[0] * o.v_[2],
            v_[0] * o.v_[1] - v_[1] * o.v_[0]};
  }

  constexpr Vec3& operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) v_[i] += o.v_[i];
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) v_[i] -= o.v_[i];
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    for (auto& c : v_) c *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(Vec3 a) { return a *= -1.0; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

  bool is_finite() const;

 private:
  std::array<double, 3> v_{};
};

// Row-major 3x3 real matrix.
class Mat3 {
 public:
  constexpr Mat3() = default;
  constexpr explicit Mat3(const std::array<double, 9>& row_major) : a_(row_major) {}
  constexpr Mat3(std::initializer_list<std::initializer_list<double>> rows) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      std::size_t c = 0;
      for (double x : row) {
        if (r < 3 && c < 3) a_[3 * r + c] = x;
        ++c;
      }
      ++r;
    }
  }

  static constexpr Mat3 zero() { return Mat3{}; }
  static constexpr Mat3 identity() { return diag(1.0, 1.0, 1.0); }
  static constexpr Mat3 diag(double d0, double d1, double d2) {
    Mat3 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    return m;
  }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  static Mat3 outer(const Vec3& u, const Vec3& v);

  constexpr double& operator()(std::size_t r, std::size_t c) { return a_[3 * r + c]; }
  constexpr double operator()(std::size_t r, std::size_t c) const { return a_[3 * r + c]; }

  const std::array<double, 9>& data() const { return a_; }

  Vec3 col(std::size_t c) const { return {a_[c], a_[3 + c], a_[6 + c]}; }
  Vec3 row(std::size_t r) const { return {a_[3 * r], a_[3 * r + 1], a_[3 * r + 2]}; }
  void set_col(std::size_t c, const Vec3& v) {
    for (std::size_t r = 0; r < 3; ++r) a_[3 * r + c] = v[r];
  }

  Mat3 transpose() const;
  double trace() const { return a_[0] + a_[4] + a_[8]; }
  double det() const;
  double frobenius() const;
  double max_abs() const;
  bool is_finite() const;

  Mat3& operator+=(const Mat3& o);
  Mat3& operator-=(const Mat3& o);
  Mat3& operator*=(double s);

  friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
  friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
  friend Mat3 operator-(Mat3 a) { return a *= -1.0; }
  friend Mat3 operator*(double s, Mat3 a) { return a *= s; }
  friend Mat3 operator*(Mat3 a, double s) { return a *= s; }
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Vec3 operator*(const Mat3& a, const Vec3& v);
  friend bool operator==(const Mat3&, const Mat3&) = default;

 private:
  std::array<double, 9> a_{};
};

// Symmetric 3x3 matrix. Construction through from() checks symmetry and
// stores the exactly symmetrized average.
class Sym3 {
 public:
  Sym3() = default;

  // Throws NonSymmetric if max|M - M^T| > eps_sym.
  static Sym3 from(const Mat3& m, double eps_sym = ToleranceConfig{}.eps_sym);
  static Sym3 symmetrized(const Mat3& m);

  const Mat3& mat() const { return m_; }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend bool operator==(const Sym3&, const Sym3&) = default;

 private:
  explicit Sym3(const Mat3& m) : m_(m) {}
  Mat3 m_{};
};

// Row-major 2x2 complex matrix.
class C2x2 {
 public:
  using value_type = std::complex<double>;

  constexpr C2x2() = default;
  constexpr C2x2(value_type a00, value_type a01, value_type a10, value_type a11)
      : a_{a00, a01, a10, a11} {}

  static constexpr C2x2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  value_type& operator()(std::size_t r, std::size_t c) { return a_[2 * r + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return a_[2 * r + c]; }

  C2x2 adjoint() const;
  value_type trace() const { return a_[0] + a_[3]; }
  double max_abs() const;

  C2x2& operator+=(const C2x2& o);
  C2x2& operator-=(const C2x2& o);
  C2x2& operator*=(value_type s);

  friend C2x2 operator+(C2x2 a, const C2x2& b) { return a += b; }
  friend C2x2 operator-(C2x2 a, const C2x2& b) { return a -= b; }
  friend C2x2 operator*(value_type s, C2x2 a) { return a *= s; }
  friend C2x2 operator*(const C2x2& a, const C2x2& b);
  friend bool operator==(const C2x2&, const C2x2&) = default;

 private:
  std::array<value_type, 4> a_{};
};

class SO3Element {
 public:
  SO3Element() = default;

  // Throws InvalidArgument unless |R^T R - I| <= tol and |det R - 1| <= tol.
  static SO3Element from(const Mat3& m, double tol = 1e-10);
  // For matrices that are rotations by construction.
  static SO3Element unchecked(const Mat3& m) { return SO3Element(m); }

  const Mat3& matrix() const { return m_; }
  SO3Element inverse() const { return SO3Element(m_.transpose()); }

  friend SO3Element operator*(const SO3Element& a, const SO3Element& b) {
    return SO3Element(a.m_ * b.m_);
  }
  friend bool operator==(const SO3Element&, const SO3Element&) = default;

 private:
  explicit SO3Element(const Mat3& m) : m_(m) {}
  Mat3 m_ = Mat3::identity();
};

/// Unit quaternion (w, x, y, z) standing for the SU(2) matrix
///
///   w·1 + x·σ(e1) + y·σ(e2) + z·σ(e3) = [[w + ix, -y + iz], [y + iz, w - ix]]
///
/// where σ is the ℝ³ → su(2) identification in lie.hpp. Group operations go
/// through that 2x2 realization, so the quaternion is only a storage format.
class SU2Element {
 public:
  SU2Element() = default;

  // Throws InvalidArgument unless |w²+x²+y²+z² - 1| <= 1e-12.
  static SU2Element from(double w, double x, double y, double z);
  static SU2Element normalized(double w, double x, double y, double z);
  // Reads (w, x, y, z) off a 2x2 matrix assumed to lie in SU(2).
  static SU2Element from_matrix(const C2x2& m);

  double w() const { return q_[0]; }
  double x() const { return q_[1]; }
  double y() const { return q_[2]; }
  double z() const { return q_[3]; }
  const std::array<double, 4>& quaternion() const { return q_; }

  C2x2 matrix() const;
  SU2Element inverse() const { return SU2Element({q_[0], -q_[1], -q_[2], -q_[3]}); }

  friend SU2Element operator*(const SU2Element& a, const SU2Element& b);
  friend SU2Element operator-(const SU2Element& a) {
    return SU2Element({-a.q_[0], -a.q_[1], -a.q_[2], -a.q_[3]});
  }
  friend bool operator==(const SU2Element&, const SU2Element&) = default;

 private:
  explicit SU2Element(const std::array<double, 4>& q) : q_(q) {}
  std::array<double, 4> q_{1.0, 0.0, 0.0, 0.0};
};

// e^{iθ} ∈ U(1), θ kept in [0, 2π).
class U1Element {
 public:
  U1Element() = default;
  explicit U1Element(double theta);

  double theta() const { return theta_; }

  friend U1Element operator*(const U1Element& a, const U1Element& b) {
    return U1Element(a.theta_ + b.theta_);
  }
  friend bool operator==(const U1Element&, const U1Element&) = default;

 private:
  double theta_ = 0.0;
};

// Reduces an angle into [0, 2π).
double canonical_angle(double theta);

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace invconn
