#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library code paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>

#include "invconn/random.hpp"
#include "invconn/types.hpp"

namespace invconn::oracle {

// Eigenvalues of a symmetric 3x3 matrix from the trigonometric solution of
// its characteristic cubic, ascending.
inline std::array<double, 3> cubic_eigenvalues(const Mat3& a) {
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  const double q = a.trace() / 3.0;
  const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                    (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  if (p == 0.0) return {q, q, q};
  const Mat3 b = (1.0 / p) * (a - Mat3::diag(q, q, q));
  const double r = std::clamp(b.det() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e0 = q + 2.0 * p * std::cos(phi);
  const double e2 = q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0);
  const double e1 = 3.0 * q - e0 - e2;
  std::array<double, 3> v{e0, e1, e2};
  std::sort(v.begin(), v.end());
  return v;
}

// Rodrigues formula: rotation by `angle` about the unit axis.
inline Mat3 axis_angle(const Vec3& axis, double angle) {
  const Vec3 k = (1.0 / axis.norm()) * axis;
  const Mat3 kx{{0.0, -k.z(), k.y()}, {k.z(), 0.0, -k.x()}, {-k.y(), k.x(), 0.0}};
  return Mat3::identity() + std::sin(angle) * kx + (1.0 - std::cos(angle)) * (kx * kx);
}

// Haar rotation built without the SU(2) covering: Gram-Schmidt on a Gaussian
// matrix with the determinant fixed to +1.
inline Mat3 gram_schmidt_rotation(Rng& rng) {
  Vec3 a = rng.normal_vec3();
  Vec3 b = rng.normal_vec3();
  a = (1.0 / a.norm()) * a;
  b = b - a.dot(b) * a;
  b = (1.0 / b.norm()) * b;
  return Mat3::from_columns(a, b, a.cross(b));
}

// Q·diag(d)·Qᵀ for a rotation Q.
inline Mat3 with_spectrum(const Mat3& q, double d0, double d1, double d2) {
  return q * Mat3::diag(d0, d1, d2) * q.transpose();
}

// Largest entrywise difference.
inline double max_abs_diff(const Mat3& a, const Mat3& b) { return (a - b).max_abs(); }

}  // namespace invconn::oracle
