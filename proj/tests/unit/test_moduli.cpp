#include <doctest.h>

#include <cmath>

#include "invconn/moduli.hpp"
#include "invconn/random.hpp"
#include "../support/oracles.hpp"

using namespace invconn;

namespace {

bool same_chart(const ChartPoint& p, const ChartPoint& q, double tol) {
  return chart_distance(p, q) <= tol;
}

ChartPoint chart_of(const Mat3& m) { return bianchi_coordinates(m); }

Mat3 random_traceless_symmetric(Rng& rng) {
  const Mat3 g = rng.gaussian_mat3();
  const Mat3 s = 0.5 * (g + g.transpose());
  return s - Mat3::diag(s.trace() / 3.0, s.trace() / 3.0, s.trace() / 3.0);
}

}  // namespace

TEST_SUITE("moduli") {
  TEST_CASE("bianchi_canonical examples") {
    const BianchiCanonical id = bianchi_canonical(Mat3::identity());
    CHECK(id.sign == CanonicalSign::Plus);
    CHECK((id.p_psd.mat() - Mat3::identity()).max_abs() < 1e-15);

    const BianchiCanonical refl = bianchi_canonical(Mat3::diag(1, 1, -1));
    CHECK(refl.sign == CanonicalSign::Minus);
    CHECK((refl.p_psd.mat() - Mat3::identity()).max_abs() < 1e-15);

    const BianchiCanonical rank1 = bianchi_canonical(Mat3::diag(2, 0, 0));
    CHECK(rank1.sign == CanonicalSign::Boundary);
    CHECK((rank1.p_psd.mat() - Mat3::diag(2, 0, 0)).max_abs() < 1e-15);
    // diag(−1, 1, −1) ∈ SO(3) carries diag(2, 0, 0) to its negative.
    const Mat3 witness = Mat3::diag(-1, 1, -1);
    CHECK(witness.det() == 1.0);
    CHECK(witness * Mat3::diag(2, 0, 0) == -Mat3::diag(2, 0, 0));
    CHECK(procrustes_align(Mat3::diag(2, 0, 0), -Mat3::diag(2, 0, 0)).residual <= 1e-10);
    const BianchiCanonical neg = bianchi_canonical(-Mat3::diag(2, 0, 0));
    CHECK(neg.sign == CanonicalSign::Boundary);
    CHECK(neg.p_psd == rank1.p_psd);
  }

  TEST_CASE("small invertible matrices are not boundary points") {
    const BianchiCanonical c = bianchi_canonical(1e-4 * Mat3::diag(1, 1, -1));
    CHECK(c.sign == CanonicalSign::Minus);
    CHECK_FALSE(bianchi_equiv(1e-4 * Mat3::identity(), -1e-4 * Mat3::identity()));
  }

  TEST_CASE("bianchi_chart examples") {
    const ChartPoint p = bianchi_chart({Sym3::from(Mat3::diag(1, 2, 3)), CanonicalSign::Plus});
    CHECK((p.a.mat() - Mat3::diag(-1, 0, 1)).max_abs() < 1e-15);
    CHECK(p.lambda == doctest::Approx(1.0).epsilon(1e-15));

    const ChartPoint z = bianchi_chart({Sym3::from(Mat3::zero()), CanonicalSign::Boundary});
    CHECK(z.a.mat() == Mat3::zero());
    CHECK(z.lambda == 0.0);

    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
      const Mat3 r0 = rng.rotation().matrix();
      const ChartPoint q = chart_of(r0 * -Mat3::diag(1, 2, 3));
      CHECK((q.a.mat() - Mat3::diag(-1, 0, 1)).max_abs() < 1e-12);
      CHECK(q.lambda == doctest::Approx(-1.0).epsilon(1e-12));
      // Right multiplication leaves the orbit; only the spectrum of A survives.
      const ChartPoint right = chart_of(-Mat3::diag(1, 2, 3) * r0);
      CHECK(right.lambda == doctest::Approx(-1.0).epsilon(1e-12));
      const auto mu = oracle::cubic_eigenvalues(right.a.mat());
      CHECK(mu[0] == doctest::Approx(-1.0));
      CHECK(mu[1] == doctest::Approx(0.0));
      CHECK(mu[2] == doctest::Approx(1.0));
    }
  }

  TEST_CASE("bianchi_chart_inv examples") {
    const BianchiCanonical a = bianchi_chart_inv(ChartPoint::from(Mat3::diag(-1, 0, 1), 1.0));
    CHECK(a.sign == CanonicalSign::Plus);
    CHECK((a.p_psd.mat() - Mat3::diag(1, 2, 3)).max_abs() < 1e-14);

    const BianchiCanonical z = bianchi_chart_inv(ChartPoint::from(Mat3::zero(), 0.0));
    CHECK(z.sign == CanonicalSign::Boundary);
    CHECK(z.p_psd.mat() == Mat3::zero());

    const BianchiCanonical m = bianchi_chart_inv(ChartPoint::from(Mat3::diag(-1, 0, 1), -1.0));
    CHECK(m.sign == CanonicalSign::Minus);
    CHECK((m.p_psd.mat() - Mat3::diag(1, 2, 3)).max_abs() < 1e-14);
    // Literal φ₋⁻¹(A, λ) = −A + (λ + µ_A)·I = diag(−1, −2, −3).
    const Mat3 literal = -Mat3::diag(-1, 0, 1) + Mat3::diag(-2, -2, -2);
    CHECK((literal + m.p_psd.mat()).max_abs() < 1e-14);
  }

  TEST_CASE("ChartPoint validation") {
    try {
      ChartPoint::from(Mat3::diag(1, 0, 0), 0.0);
      FAIL("expected NotTraceless");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotTraceless);
    }
    try {
      ChartPoint::from(Mat3{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, 0.0);
      FAIL("expected NotSymmetric");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSymmetric);
    }
  }

  TEST_CASE("chart is constant on orbits") {
    Rng rng(2);
    for (int i = 0; i < 20000; ++i) {
      Mat3 m = rng.gaussian_mat3();
      if (i % 5 == 0) m.set_col(2, m.col(0) - 2.0 * m.col(1));
      if (i % 7 == 0) m = Mat3::outer(rng.normal_vec3(), rng.normal_vec3());
      const Mat3 r = oracle::gram_schmidt_rotation(rng);
      CHECK(same_chart(chart_of(r * m), chart_of(m), 1e-7));
    }
  }

  TEST_CASE("chart scales with positive multiples") {
    Rng rng(3);
    for (int i = 0; i < 10000; ++i) {
      const Mat3 m = rng.gaussian_mat3();
      const double c = std::exp(rng.uniform(-2.0, 2.0));
      const ChartPoint p = chart_of(m);
      const ChartPoint q = chart_of(c * m);
      CHECK(((c * p.a.mat()) - q.a.mat()).max_abs() <= 1e-8);
      CHECK(std::abs(c * p.lambda - q.lambda) <= 1e-8);
    }
  }

  TEST_CASE("chart and inverse are mutually inverse") {
    Rng rng(4);
    for (int i = 0; i < 20000; ++i) {
      // Sym₀ × ℝ → canonical → Sym₀ × ℝ
      const Mat3 a = random_traceless_symmetric(rng);
      const double lambda = i % 10 == 0 ? 0.0 : rng.normal();
      const ChartPoint p = ChartPoint::from(a, lambda);
      CHECK(same_chart(bianchi_chart(bianchi_chart_inv(p)), p, 1e-8));

      // canonical → chart → canonical
      Mat3 m = rng.gaussian_mat3();
      if (i % 6 == 0) m.set_col(0, m.col(1) + m.col(2));
      const BianchiCanonical c = bianchi_canonical(m);
      const BianchiCanonical back = bianchi_chart_inv(bianchi_chart(c));
      CHECK(back.sign == c.sign);
      CHECK((back.p_psd.mat() - c.p_psd.mat()).max_abs() <= 1e-8);
    }
  }

  TEST_CASE("boundary charts glue: φ₋(−P) = φ₊(P)") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
      const Mat3 q = oracle::gram_schmidt_rotation(rng);
      const double d1 = i % 3 == 0 ? 0.0 : rng.uniform(0.1, 3.0);
      const Sym3 p = Sym3::symmetrized(oracle::with_spectrum(q, 0.0, d1, rng.uniform(0.1, 3.0)));
      const ChartPoint plus = phi_plus(p);
      const ChartPoint minus = phi_minus(Sym3::symmetrized(-p.mat()));
      CHECK(plus.lambda == 0.0);
      CHECK(minus.lambda == 0.0);
      CHECK((plus.a.mat() - minus.a.mat()).max_abs() <= 1e-10);
      // The minus-tagged representative of the same P charts to the same point.
      const ChartPoint tagged = bianchi_chart({p, CanonicalSign::Minus});
      CHECK(tagged.lambda == 0.0);
      CHECK((tagged.a.mat() - plus.a.mat()).max_abs() <= 1e-10);
    }
  }

  TEST_CASE("classify_stratum examples") {
    Rng rng(6);
    CHECK(classify_stratum(ChartPoint::from(random_traceless_symmetric(rng), 5.0)).index == 3);
    CHECK(classify_stratum(ChartPoint::from(Mat3::diag(-1, -1, 2), 0.0)).index == 1);
    CHECK(classify_stratum(ChartPoint::from(Mat3::diag(1, 1, -2), 0.0)).index == 2);
    CHECK(classify_stratum(ChartPoint::from(Mat3::zero(), 0.0)).index == 0);
  }

  TEST_CASE("S₁ example satisfies the discriminant identity") {
    // e2 = −3, det = 2: 27·4 = 108 = −4·(−27).
    const StratumReport rep = diagnose_stratum(ChartPoint::from(Mat3::diag(-1, -1, 2), 0.0));
    CHECK(rep.discriminant == 0.0);
    CHECK(rep.discriminant_s1);
    CHECK(rep.spectral_s1);
    const StratumReport neg = diagnose_stratum(ChartPoint::from(Mat3::diag(1, 1, -2), 0.0));
    CHECK(neg.discriminant == 0.0);
    CHECK_FALSE(neg.discriminant_s1);
    CHECK_FALSE(neg.spectral_s1);
  }

  TEST_CASE("strata match the rank of the representative") {
    Rng rng(7);
    const ToleranceConfig cfg;
    for (int i = 0; i < 1000; ++i) {
      const Mat3 q = oracle::gram_schmidt_rotation(rng);
      const double mu = rng.uniform(0.05, 3.0);
      // S₃: any A, λ ≠ 0
      const ChartPoint s3 = ChartPoint::from(random_traceless_symmetric(rng),
                                             (i % 2 ? 1.0 : -1.0) * rng.uniform(0.05, 3.0));
      // S₂: three distinct eigenvalues, λ = 0
      const double d0 = rng.uniform(-3.0, -0.1);
      const double d1 = d0 + rng.uniform(0.1, 2.0);
      const ChartPoint s2 = ChartPoint::from(oracle::with_spectrum(q, d0, d1, -d0 - d1), 0.0);
      // S₁: spectrum {−µ, −µ, 2µ}
      const ChartPoint s1 = ChartPoint::from(oracle::with_spectrum(q, -mu, -mu, 2.0 * mu), 0.0);
      const ChartPoint s0 = ChartPoint::from(Mat3::zero(), 0.0);
      int expected = 3;
      for (const ChartPoint& p : {s3, s2, s1, s0}) {
        CHECK(classify_stratum(p, cfg).index == expected);
        CHECK(numeric_rank(bianchi_chart_inv(p, cfg).p_psd.mat(), cfg) == expected);
        --expected;
      }
    }
  }

  TEST_CASE("S₁ discriminant accepts S₁ and rejects controls") {
    Rng rng(8);
    for (int i = 0; i < 1000; ++i) {
      const Mat3 q = oracle::gram_schmidt_rotation(rng);
      const double mu = rng.uniform(0.0, 3.0);
      const StratumReport in =
          diagnose_stratum(ChartPoint::from(oracle::with_spectrum(q, -mu, -mu, 2.0 * mu), 0.0));
      CHECK(in.discriminant_s1);

      const double d0 = rng.uniform(-3.0, -0.2);
      const double d1 = d0 + rng.uniform(0.2, 2.0);
      const StratumReport distinct =
          diagnose_stratum(ChartPoint::from(oracle::with_spectrum(q, d0, d1, -d0 - d1), 0.0));
      CHECK_FALSE(distinct.discriminant_s1);
      CHECK_FALSE(distinct.spectral_s1);

      const double nu = rng.uniform(0.1, 3.0);  // det = −2ν³ < −10⁻³
      const StratumReport negdet =
          diagnose_stratum(ChartPoint::from(oracle::with_spectrum(q, nu, nu, -2.0 * nu), 0.0));
      CHECK_FALSE(negdet.discriminant_s1);
      CHECK(classify_stratum(ChartPoint::from(oracle::with_spectrum(q, nu, nu, -2.0 * nu), 0.0)).index ==
            2);
    }
  }

  TEST_CASE("bianchi_equiv examples") {
    Rng rng(9);
    const Mat3 m = rng.gaussian_mat3();
    CHECK(bianchi_equiv(m, rng.rotation().matrix() * m));
    CHECK(bianchi_equiv(Mat3::diag(2, 0, 0), -Mat3::diag(2, 0, 0)));
    CHECK_FALSE(bianchi_equiv(Mat3::identity(), -Mat3::identity()));
    CHECK(procrustes_align(Mat3::identity(), -Mat3::identity()).residual > 1.0);
  }

  TEST_CASE("bianchi_equiv agrees with the Procrustes oracle") {
    Rng rng(10);
    for (int i = 0; i < 2000; ++i) {
      Mat3 m = rng.gaussian_mat3();
      if (i % 4 == 0) m.set_col(1, 3.0 * m.col(0));
      Mat3 n = rng.gaussian_mat3();
      switch (i % 3) {
        case 0: n = oracle::gram_schmidt_rotation(rng) * m; break;
        case 1: n = -m; break;
        default: break;
      }
      const bool eq = bianchi_equiv(m, n);
      const double residual = procrustes_align(m, n).residual;
      if (eq) {
        CHECK(residual <= 1e-6 * std::max(1.0, m.frobenius()));
      }
      if (chart_distance(chart_of(m), chart_of(n)) > 1e-3) {
        CHECK_FALSE(eq);
        CHECK(residual > 1e-4);
      }
    }
  }

  TEST_CASE("su2_to_so3_class examples") {
    CHECK(su2_to_so3_class(Mat3::zero()) == Mat3::zero());
    CHECK(su2_to_so3_class(Mat3::identity()) == Mat3::diag(-2, -2, -2));
    // Column j of the result is hat⁻¹(ρ*(σ(Λeⱼ))).
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
      const Mat3 l = rng.gaussian_mat3();
      Mat3 expect;
      for (std::size_t j = 0; j < 3; ++j) expect.set_col(j, unhat(rho_star(l.col(j))));
      CHECK((su2_to_so3_class(l) - expect).max_abs() < 1e-14);
    }
  }

  TEST_CASE("su2_to_so3_class preserves and reflects orbit equivalence") {
    Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
      const Mat3 l = rng.gaussian_mat3();
      const Mat3 lp = i % 2 == 0 ? rng.rotation().matrix() * l : rng.gaussian_mat3();
      CHECK(bianchi_equiv(l, lp) == bianchi_equiv(su2_to_so3_class(l), su2_to_so3_class(lp)));
    }
  }

  TEST_CASE("axial_canonical examples and gauge invariance") {
    const AxialModulus m = axial_canonical(2, 3, 4);
    CHECK(m.a == 2.0);
    CHECK(m.r == 5.0);
    CHECK(axial_canonical(7.0, 0.0, 0.0).r == 0.0);
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
      const double phi = rng.uniform(0.0, kTwoPi);
      CHECK(std::abs(axial_canonical(0.0, std::cos(phi), std::sin(phi)).r - 1.0) < 1e-15);

      const double a = rng.normal();
      const double b = rng.normal();
      const double c = rng.normal();
      const Mat3 l{{a, 0, 0}, {0, b, -c}, {0, c, b}};
      const AxialModulus base = axial_canonical(l);
      const AxialModulus moved = axial_canonical(axial_gauge(rng.uniform(0.0, kTwoPi), l));
      CHECK(std::abs(base.a - moved.a) <= 1e-10);
      CHECK(std::abs(base.r - moved.r) <= 1e-10);
      CHECK(moved.r >= 0.0);
    }
    CHECK_THROWS_AS(axial_canonical(Mat3{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), Error);
  }

  TEST_CASE("axial_su2_modulus examples") {
    const AxialSU2Modulus a = axial_su2_modulus(1, Mat3::diag(5, 0, 0));
    CHECK(a.n == 1);
    CHECK(a.c == 5.0);
    CHECK(axial_su2_modulus(1, Mat3::zero()).c == 0.0);
    const AxialSU2Modulus z = axial_su2_modulus(0, Mat3{{3, 0, 0}, {4, 0, 0}, {0, 0, 0}});
    CHECK(z.n == 0);
    CHECK(z.c == doctest::Approx(5.0));
    try {
      axial_su2_modulus(2, Mat3{{1, 0, 0}, {1, 0, 0}, {0, 0, 0}});
      FAIL("expected NotInSolutionSpace");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInSolutionSpace);
    }
  }

  TEST_CASE("iso_modulus examples") {
    CHECK(iso_modulus(3.0 * Mat3::identity()) == doctest::Approx(3.0));
    CHECK(iso_modulus(Mat3::zero()) == 0.0);
    try {
      iso_modulus(Mat3::diag(1, 2, 3));
      FAIL("expected NotEquivariant");
    } catch (const NotEquivariantError& e) {
      CHECK(e.code() == ErrorCode::NotEquivariant);
      CHECK(e.residual() >= 1.0);
      const Mat3& w = e.witness();
      CHECK((w.transpose() * w - Mat3::identity()).max_abs() < 1e-12);
    }
  }

  TEST_CASE("S₁ sextic") {
    CHECK(verify_s1_sextic());
    CHECK(sextic_from_double_roots() == kS1Sextic);
    const auto p = [](double t) {
      double acc = 0.0;
      for (auto c : kS1Sextic) acc = acc * t + static_cast<double>(c);
      return acc;
    };
    CHECK(p(1.0) == 0.0);
    CHECK(p(-2.0) == 0.0);
    CHECK(p(-0.5) == 0.0);
    CHECK(p(0.0) == 4.0);
  }
}
