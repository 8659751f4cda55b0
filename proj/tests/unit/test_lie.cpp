#include <doctest.h>

#include <cmath>

#include "invconn/lie.hpp"
#include "invconn/random.hpp"
#include "../support/oracles.hpp"

using namespace invconn;
using C = std::complex<double>;

namespace {

double c2_diff(const C2x2& a, const C2x2& b) { return (a - b).max_abs(); }

// R(φ) written out independently of x_rotation.
Mat3 rx(double phi) {
  return {{1.0, 0.0, 0.0}, {0.0, std::cos(phi), -std::sin(phi)}, {0.0, std::sin(phi), std::cos(phi)}};
}

}  // namespace

TEST_SUITE("lie") {
  TEST_CASE("hat examples") {
    CHECK(hat({1, 0, 0}) == Mat3{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}});
    CHECK(hat({0, 0, 0}) == Mat3::zero());
    CHECK(hat({1, 2, 3}) * Vec3{1, 0, 0} == Vec3{0, 3, -2});
  }

  TEST_CASE("hat is the cross product") {
    Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
      const Vec3 u = rng.normal_vec3();
      const Vec3 w = rng.normal_vec3();
      const Vec3 d = hat(u) * w - u.cross(w);
      CHECK(std::max({std::abs(d[0]), std::abs(d[1]), std::abs(d[2])}) <= 1e-14);
      CHECK(hat(u) + hat(u).transpose() == Mat3::zero());
    }
  }

  TEST_CASE("unhat examples and errors") {
    CHECK(unhat(Mat3::zero()) == Vec3{0, 0, 0});
    CHECK(unhat(hat({1, 2, 3})) == Vec3{1, 2, 3});
    CHECK(unhat(Mat3{{0, -3, 2}, {3, 0, -1}, {-2, 1, 0}}) == Vec3{1, 2, 3});
    try {
      unhat(Mat3::identity());
      FAIL("expected NonAntisymmetric");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonAntisymmetric);
    }
  }

  TEST_CASE("sigma examples") {
    CHECK(sigma({1, 0, 0}) == C2x2(C(0, 1), 0.0, 0.0, C(0, -1)));
    CHECK(sigma({0, 0, 0}) == C2x2{});
    const Vec3 v{3, -1, 2};
    const Vec3 back = sigma_inv(sigma(v));
    CHECK((back - v).norm() == 0.0);
    // The displayed matrix [[ix, −y+iz], [y+iz, −ix]].
    CHECK(sigma({1, 2, 3}) == C2x2(C(0, 1), C(-2, 3), C(2, 3), C(0, -1)));
  }

  TEST_CASE("sigma is linear, traceless and anti-Hermitian") {
    Rng rng(2);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 u = rng.normal_vec3();
      const Vec3 v = rng.normal_vec3();
      const double a = rng.normal();
      CHECK(c2_diff(sigma(a * u + v), C(a) * sigma(u) + sigma(v)) < 1e-14);
      CHECK(std::abs(sigma(u).trace()) == 0.0);
      CHECK(c2_diff(sigma(u).adjoint(), C(-1.0) * sigma(u)) == 0.0);
    }
  }

  TEST_CASE("sigma_inv rejects matrices outside su(2)") {
    for (const C2x2& x : {C2x2::identity(), C2x2(C(1, 0), 0.0, 0.0, C(-1, 0)), C2x2(0.0, 1.0, 1.0, 0.0)}) {
      try {
        sigma_inv(x);
        FAIL("expected NotInAlgebra");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInAlgebra);
      }
    }
  }

  TEST_CASE("quaternion storage matches the 2x2 realization") {
    // 1, σ(e1), σ(e2), σ(e3) as quaternion units.
    CHECK(SU2Element{}.matrix() == C2x2::identity());
    CHECK(SU2Element::from(0, 1, 0, 0).matrix() == sigma({1, 0, 0}));
    CHECK(SU2Element::from(0, 0, 1, 0).matrix() == sigma({0, 1, 0}));
    CHECK(SU2Element::from(0, 0, 0, 1).matrix() == sigma({0, 0, 1}));
    CHECK_THROWS_AS(SU2Element::from(1, 1, 0, 0), Error);
  }

  TEST_CASE("covering_rho basics") {
    CHECK((covering_rho(SU2Element{}).matrix() - Mat3::identity()).max_abs() == 0.0);
    for (double theta : {0.0, 0.3, 1.0, kPi / 2, 2.5, kPi, 5.0}) {
      const Mat3 r = covering_rho(mu_n(1, U1Element(theta))).matrix();
      CHECK((r - rx(2.0 * theta)).max_abs() < 1e-12);
    }
  }

  TEST_CASE("covering_rho is a homomorphism with kernel ±1") {
    Rng rng(3);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const SU2Element a = rng.unit_quaternion();
      const SU2Element b = rng.unit_quaternion();
      const Mat3 lhs = covering_rho(a * b).matrix();
      const Mat3 rhs = covering_rho(a).matrix() * covering_rho(b).matrix();
      worst = std::max(worst, (lhs - rhs).max_abs());
      CHECK(covering_rho(-a) == covering_rho(a));
      const Mat3 r = covering_rho(a).matrix();
      CHECK((r.transpose() * r - Mat3::identity()).max_abs() < 1e-12);
      CHECK(std::abs(r.det() - 1.0) < 1e-12);
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("rho_star examples") {
    CHECK(rho_star({0, 0, 0}) == Mat3::zero());
    CHECK(rho_star({1, 0, 0}) == hat({-2, 0, 0}));
    // [σ(e1), σ(e2)] = −2σ(e3) by direct 2x2 multiplication.
    const C2x2 s1 = sigma({1, 0, 0});
    const C2x2 s2 = sigma({0, 1, 0});
    CHECK(c2_diff(s1 * s2 - s2 * s1, C(-2.0) * sigma({0, 0, 1})) == 0.0);
  }

  TEST_CASE("rho_star is −2·hat") {
    for (std::size_t i = 0; i < 3; ++i) {
      const Vec3 e = Vec3::unit(i);
      CHECK((rho_star(e) - hat(-2.0 * e)).max_abs() <= 1e-12);
    }
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 u = rng.normal_vec3();
      CHECK((rho_star(u) - hat(-2.0 * u)).max_abs() <= 1e-12);
    }
  }

  TEST_CASE("rho_star is equivariant") {
    Rng rng(5);
    for (int i = 0; i < 10000; ++i) {
      const SU2Element a = rng.unit_quaternion();
      const Vec3 v = rng.normal_vec3();
      const Mat3 r = covering_rho(a).matrix();
      const Mat3 lhs = rho_star(adjoint(a, v));
      const Mat3 rhs = r * rho_star(v) * r.transpose();
      CHECK((lhs - rhs).max_abs() <= 1e-10);
    }
  }

  TEST_CASE("rho_star matches a central difference of covering_rho") {
    Rng rng(6);
    const double h = 1e-5;
    for (int i = 0; i < 200; ++i) {
      const Vec3 u = rng.normal_vec3();
      const Mat3 fd = (1.0 / (2.0 * h)) *
                      (covering_rho(su2_exp(u, h)).matrix() - covering_rho(su2_exp(u, -h)).matrix());
      CHECK((fd - rho_star(u)).max_abs() <= 1e-6);
    }
  }

  TEST_CASE("su2_exp agrees with the 2x2 power series") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      const Vec3 u = 0.7 * rng.normal_vec3();
      const C2x2 x = sigma(u);
      C2x2 term = C2x2::identity();
      C2x2 sum = C2x2::identity();
      for (int k = 1; k < 40; ++k) {
        term = C(1.0 / k) * (term * x);
        sum += term;
      }
      CHECK(c2_diff(su2_exp(u, 1.0).matrix(), sum) < 1e-12);
    }
  }

  TEST_CASE("mu_n examples") {
    for (double theta : {0.0, 1.0, 4.0}) CHECK(mu_n(0, U1Element(theta)) == SU2Element{});
    const SU2Element m = mu_n(1, U1Element(kPi));
    CHECK(std::abs(m.w() + 1.0) < 1e-15);
    CHECK(c2_diff(m.matrix(), C(-1.0) * C2x2::identity()) < 1e-15);
    // diag(e^{−inθ}, e^{inθ})
    const C2x2 d = mu_n(3, U1Element(0.4)).matrix();
    CHECK(std::abs(d(0, 0) - std::exp(C(0, -1.2))) < 1e-15);
    CHECK(std::abs(d(1, 1) - std::exp(C(0, 1.2))) < 1e-15);
    CHECK(std::abs(d(0, 1)) == 0.0);
  }

  TEST_CASE("mu_n acts on σ-coordinates as R(2nθ)") {
    Rng rng(8);
    double worst = 0.0;
    for (int n = -3; n <= 3; ++n) {
      for (int i = 0; i < 500; ++i) {
        const double theta = rng.uniform(0.0, kTwoPi);
        const Mat3 ad = covering_rho(mu_n(n, U1Element(theta))).matrix();
        worst = std::max(worst, (ad - rx(2.0 * n * theta)).max_abs());
      }
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("mu_n is a homomorphism in θ") {
    Rng rng(9);
    for (int i = 0; i < 500; ++i) {
      const int n = static_cast<int>(rng.uniform(-10.0, 10.0));
      const U1Element a(rng.uniform(0.0, kTwoPi));
      const U1Element b(rng.uniform(0.0, kTwoPi));
      const C2x2 lhs = mu_n(n, a * b).matrix();
      const C2x2 rhs = (mu_n(n, a) * mu_n(n, b)).matrix();
      CHECK(c2_diff(lhs, rhs) < 1e-12);
    }
  }

  TEST_CASE("mu_n and mu_-n are conjugate by the Weyl element") {
    const SU2Element w = weyl_element();
    for (int n = -4; n <= 4; ++n) {
      for (double theta : {0.2, 1.3, 3.0}) {
        const SU2Element lhs = w * mu_n(n, U1Element(theta)) * w.inverse();
        CHECK(c2_diff(lhs.matrix(), mu_n(-n, U1Element(theta)).matrix()) < 1e-14);
      }
      CHECK(mu_conjugate(n, -n));
      CHECK(mu_conjugate(n, n));
      if (n != 0) CHECK_FALSE(mu_conjugate(n, n + 1));
    }
  }

  TEST_CASE("lambda_axial examples") {
    CHECK((lambda_axial(AxialSign::Plus, U1Element(0.0)).matrix() - Mat3::identity()).max_abs() == 0.0);
    const Mat3 q = lambda_axial(AxialSign::Plus, U1Element(kPi / 2)).matrix();
    CHECK((q - Mat3{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}).max_abs() < 1e-15);
    Rng rng(10);
    for (int i = 0; i < 100; ++i) {
      const double t = rng.uniform(0.0, kTwoPi);
      const Mat3 minus = lambda_axial(AxialSign::Minus, U1Element(t)).matrix();
      const Mat3 plus_neg = lambda_axial(AxialSign::Plus, U1Element(-t)).matrix();
      CHECK((minus - plus_neg).max_abs() < 1e-14);
      const double s = rng.uniform(0.0, kTwoPi);
      const Mat3 prod = lambda_axial(AxialSign::Plus, U1Element(t)).matrix() *
                        lambda_axial(AxialSign::Plus, U1Element(s)).matrix();
      CHECK((prod - lambda_axial(AxialSign::Plus, U1Element(t + s)).matrix()).max_abs() < 1e-14);
    }
  }

  TEST_CASE("U1Element canonicalization") {
    CHECK(U1Element(kTwoPi).theta() == 0.0);
    CHECK(U1Element(-kPi / 2).theta() == doctest::Approx(1.5 * kPi));
    CHECK(U1Element(7.0 * kTwoPi + 1.0).theta() == doctest::Approx(1.0));
    CHECK(U1Element(-1e-300).theta() < kTwoPi);
  }

  TEST_CASE("Haar rotations through the cover match Gram-Schmidt statistics") {
    // E[R₀₀²] = 1/3 for Haar-distributed rotations.
    Rng rng(11);
    double s = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const double r00 = rng.rotation().matrix()(0, 0);
      s += r00 * r00;
    }
    CHECK(std::abs(s / n - 1.0 / 3.0) < 0.01);
  }
}
