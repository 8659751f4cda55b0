#include "invconn/cli/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "invconn/cli/batch.hpp"
#include "invconn/cli/command.hpp"
#include "invconn/lie.hpp"
#include "invconn/moduli.hpp"
#include "invconn/numerics.hpp"
#include "invconn/random.hpp"
#include "invconn/wang.hpp"

namespace invconn::cli {
namespace {

const ToleranceConfig kCfg{};

// Accumulates residuals and pass/fail checks for one suite.
class Tally {
 public:
  Tally(std::string name, int criterion, double threshold) {
    r_.name = std::move(name);
    r_.criterion = criterion;
    r_.threshold = threshold;
  }

  void residual(double v) {
    ++r_.samples;
    r_.worst = std::max(r_.worst, v);
    if (!(v <= r_.threshold)) ++r_.failures;
  }
  // Residual held to a bound other than the headline threshold.
  void residual(double v, double bound) {
    ++r_.samples;
    if (!(v <= bound)) ++r_.failures;
  }
  void check(bool ok) {
    ++r_.samples;
    if (!ok) ++r_.failures;
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }

  SuiteResult done() {
    r_.pass = r_.failures == 0;
    return r_;
  }

 private:
  SuiteResult r_;
};

std::uint64_t suite_key(std::uint64_t seed, std::uint64_t tag) {
  return seed * 0x9E3779B97F4A7C15ULL + tag;
}

Mat3 cross_matrix(const Vec3& u) {
  return {{0.0, -u.z(), u.y()}, {u.z(), 0.0, -u.x()}, {-u.y(), u.x(), 0.0}};
}

Mat3 rot_x(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {{1, 0, 0}, {0, c, -s}, {0, s, c}};
}

Mat3 traceless_symmetric(Rng& rng) {
  const Mat3 g = rng.gaussian_mat3();
  const Mat3 s = 0.5 * (g + g.transpose());
  const double t = s.trace() / 3.0;
  return s - Mat3::diag(t, t, t);
}

Mat3 with_spectrum(const Mat3& q, double d0, double d1, double d2) {
  return q * Mat3::diag(d0, d1, d2) * q.transpose();
}

// Gaussian matrix, with every k-th draw pushed to rank 2 or rank 1.
Mat3 mixed_rank(Rng& rng, std::size_t i) {
  Mat3 m = rng.gaussian_mat3();
  if (i % 5 == 0) m.set_col(2, rng.normal() * m.col(0) + rng.normal() * m.col(1));
  if (i % 7 == 0) m = Mat3::outer(rng.normal_vec3(), rng.normal_vec3());
  return m;
}

// ---- acceptance criteria ---------------------------------------------------

SuiteResult orbit_invariance(std::uint64_t seed, Scale scale) {
  Tally t("orbit-invariance", 1, 1e-7);
  const std::size_t n = scaled(100000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 1), i);
    const Mat3 m = mixed_rank(rng, i);
    const Mat3 r = rng.rotation().matrix();
    t.residual(chart_distance(bianchi_coordinates(r * m), bianchi_coordinates(m)));
  }
  return t.done();
}

SuiteResult boundary_identification(std::uint64_t seed, Scale scale) {
  Tally t("boundary-identification", 2, 1e-8);
  const std::size_t n = scaled(1000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 2), i);
    Mat3 m = rng.gaussian_mat3();
    if (i % 2 == 0) {
      m.set_col(i % 3, rng.normal() * m.col((i + 1) % 3) + rng.normal() * m.col((i + 2) % 3));
    } else {
      m = Mat3::outer(rng.normal_vec3(), rng.normal_vec3());
    }
    t.check(bianchi_equiv(m, -m));
    t.residual(procrustes_align(m, -m).residual);
  }
  const bool separated = !bianchi_equiv(Mat3::identity(), -Mat3::identity());
  t.check(separated);
  t.note(std::string("equiv(I,-I)=") + (separated ? "false" : "true"));
  return t.done();
}

SuiteResult chart_bijection(std::uint64_t seed, Scale scale) {
  Tally t("chart-bijection-gluing", 3, 1e-8);
  const std::size_t n = scaled(100000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 3), i);
    const double lambda = i % 10 == 0 ? 0.0 : rng.normal();
    const ChartPoint p = ChartPoint::from(traceless_symmetric(rng), lambda);
    t.residual(chart_distance(bianchi_chart(bianchi_chart_inv(p)), p));

    Mat3 m = rng.gaussian_mat3();
    if (i % 6 == 0) m.set_col(0, m.col(1) + m.col(2));
    const BianchiCanonical c = bianchi_canonical(m);
    const BianchiCanonical back = bianchi_chart_inv(bianchi_chart(c));
    t.check(back.sign == c.sign);
    t.residual((back.p_psd.mat() - c.p_psd.mat()).max_abs());
  }
  const std::size_t nb = scaled(1000, scale);
  double glue_worst = 0.0;
  for (std::size_t i = 0; i < nb; ++i) {
    Rng rng(suite_key(seed, 30), i);
    const Mat3 q = rng.rotation().matrix();
    const double d1 = i % 3 == 0 ? 0.0 : rng.uniform(0.1, 3.0);
    const Sym3 p = Sym3::symmetrized(with_spectrum(q, 0.0, d1, rng.uniform(0.1, 3.0)));
    const ChartPoint plus = phi_plus(p);
    const ChartPoint minus = phi_minus(Sym3::symmetrized(-p.mat()));
    const double d = (plus.a.mat() - minus.a.mat()).max_abs();
    glue_worst = std::max(glue_worst, d);
    t.residual(d, 1e-10);
    t.check(plus.lambda == 0.0 && minus.lambda == 0.0);
  }
  t.note(diag("gluing_worst", glue_worst));
  t.note("gluing_threshold=1e-10");
  return t.done();
}

SuiteResult stratum_correspondence(std::uint64_t seed, Scale scale) {
  Tally t("stratum-correspondence", 4, 0.0);
  const std::size_t n = scaled(1000, scale);
  std::size_t misclassified = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 4), i);
    const Mat3 q = rng.rotation().matrix();
    const double mu = rng.uniform(0.05, 3.0);
    const ChartPoint s3 = ChartPoint::from(traceless_symmetric(rng),
                                           (i % 2 ? 1.0 : -1.0) * rng.uniform(0.05, 3.0));
    const double d0 = rng.uniform(-3.0, -0.1);
    const double d1 = d0 + rng.uniform(0.1, 2.0);
    const ChartPoint s2 = ChartPoint::from(with_spectrum(q, d0, d1, -d0 - d1), 0.0);
    const ChartPoint s1 = ChartPoint::from(with_spectrum(q, -mu, -mu, 2.0 * mu), 0.0);
    const ChartPoint s0 = ChartPoint::from(Mat3::zero(), 0.0);
    int expected = 3;
    for (const ChartPoint* p : {&s3, &s2, &s1, &s0}) {
      const int got = classify_stratum(*p).index;
      const bool ok = got == expected && numeric_rank(bianchi_chart_inv(*p).p_psd.mat()) == got;
      if (!ok) ++misclassified;
      t.check(ok);
      --expected;
    }
    t.check(diagnose_stratum(s1).discriminant_s1);

    const double e0 = rng.uniform(-3.0, -0.2);
    const double e1 = e0 + rng.uniform(0.2, 2.0);
    t.check(!diagnose_stratum(ChartPoint::from(with_spectrum(q, e0, e1, -e0 - e1), 0.0)).discriminant_s1);
    const double nu = rng.uniform(0.1, 3.0);
    t.check(!diagnose_stratum(ChartPoint::from(with_spectrum(q, nu, nu, -2.0 * nu), 0.0)).discriminant_s1);
  }
  t.note("misclassified=" + std::to_string(misclassified));
  return t.done();
}

// Ascending-degree integer polynomial product.
std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

SuiteResult sextic(std::uint64_t, Scale) {
  Tally t("s1-sextic", 5, 0.0);
  t.check(verify_s1_sextic());
  t.check(sextic_from_double_roots() == kS1Sextic);

  // Second route: 4(t² + t + 1)³ − 27t²(t + 1)².
  const std::vector<std::int64_t> q{1, 1, 1};
  std::vector<std::int64_t> lhs = poly_mul(poly_mul(q, q), q);
  for (auto& c : lhs) c *= 4;
  const std::vector<std::int64_t> t1{0, 1, 1};
  std::vector<std::int64_t> rhs = poly_mul(t1, t1);
  rhs.resize(lhs.size(), 0);
  std::array<std::int64_t, 7> route{};
  for (std::size_t k = 0; k < 7; ++k) route[6 - k] = lhs[k] - 27 * rhs[k];
  t.check(route == kS1Sextic);

  std::string coeffs;
  for (auto c : kS1Sextic) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(c);
  t.note("coefficients=" + coeffs);
  return t.done();
}

SuiteResult covering(std::uint64_t seed, Scale scale) {
  Tally t("covering", 6, 1e-12);
  const std::size_t n = scaled(10000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 6), i);
    const SU2Element a = rng.unit_quaternion();
    const SU2Element b = rng.unit_quaternion();
    const Mat3 ra = covering_rho(a).matrix();
    t.residual((covering_rho(a * b).matrix() - ra * covering_rho(b).matrix()).max_abs());
    t.residual((covering_rho(-a).matrix() - ra).max_abs());
  }
  const std::size_t angles = std::max<std::size_t>(8, scaled(6400, scale) / 7);
  for (int k = -3; k <= 3; ++k) {
    for (std::size_t j = 0; j < angles; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(angles);
      const Mat3 ad = covering_rho(mu_n(k, U1Element(theta))).matrix();
      t.residual((ad - rot_x(2.0 * k * theta)).max_abs());
    }
  }
  return t.done();
}

SuiteResult differential(std::uint64_t seed, Scale scale) {
  Tally t("rho-star", 7, 1e-10);
  const std::size_t n = scaled(10000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 7), i);
    const SU2Element a = rng.unit_quaternion();
    const Vec3 u = rng.normal_vec3();
    const Mat3 r = covering_rho(a).matrix();
    t.residual((rho_star(adjoint(a, u)) - r * rho_star(u) * r.transpose()).max_abs());
  }
  double hat_worst = 0.0;
  const auto against_hat = [&](const Vec3& u) {
    const double d = (rho_star(u) - (-2.0) * cross_matrix(u)).max_abs();
    hat_worst = std::max(hat_worst, d);
    t.residual(d, 1e-12);
  };
  for (std::size_t k = 0; k < 3; ++k) against_hat(Vec3::unit(k));
  const std::size_t nr = scaled(1000, scale);
  for (std::size_t i = 0; i < nr; ++i) {
    Rng rng(suite_key(seed, 70), i);
    against_hat(rng.normal_vec3());
  }
  double fd_worst = 0.0;
  const double h = 1e-5;
  const auto finite_difference = [&](const Vec3& u) {
    const Mat3 fd = (1.0 / (2.0 * h)) *
                    (covering_rho(su2_exp(u, h)).matrix() - covering_rho(su2_exp(u, -h)).matrix());
    const double d = (fd - rho_star(u)).max_abs();
    fd_worst = std::max(fd_worst, d);
    t.residual(d, 1e-6);
  };
  for (std::size_t k = 0; k < 3; ++k) finite_difference(Vec3::unit(k));
  for (std::size_t i = 0; i < std::max<std::size_t>(10, nr / 10); ++i) {
    Rng rng(suite_key(seed, 71), i);
    finite_difference(rng.normal_vec3());
  }
  t.note(diag("hat_worst", hat_worst));
  t.note(diag("finite_difference_worst", fd_worst));
  return t.done();
}

SuiteResult dimension_table(std::uint64_t, Scale) {
  Tally t("dimension-table", 8, 1e-10);
  struct Row {
    IsotropyClass iso;
    LiftSpec lift;
    int expected;
  };
  const std::vector<Row> rows{
      {IsotropyClass::bianchi(), LiftSpec::metric(), 9},
      {IsotropyClass::axial(AxialSign::Plus), LiftSpec::metric(), 3},
      {IsotropyClass::axial(AxialSign::Minus), LiftSpec::metric(), 3},
      {IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(1), 1},
      {IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(-2), 1},
      {IsotropyClass::axial(AxialSign::Minus), LiftSpec::su2(3), 1},
      {IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(8), 1},
      {IsotropyClass::isotropic(), LiftSpec::metric(), 1},
      {IsotropyClass::isotropic(), LiftSpec::su2(0), 0},
      {IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(0), 3},
  };
  for (const Row& row : rows) {
    const EquivariantBasis b = solve_equivariant_basis(row.iso, row.lift);
    t.check(b.dimension == row.expected);
    std::string line = describe(row.iso) + "/" + describe(row.lift) + "=" + std::to_string(b.dimension);
    if (row.iso.kind == IsotropyClass::Kind::Axial && row.lift.flavor == LiftSpec::Flavor::SU2Lift &&
        row.lift.n == 0) {
      line += " (flagged: trivial lift leaves the first column free)";
    }
    t.note(std::move(line));
  }

  const double h = std::sqrt(0.5);
  const EquivariantBasis ax = solve_equivariant_basis(IsotropyClass::axial(AxialSign::Plus), LiftSpec::metric());
  for (const Mat3& e : {Mat3::diag(1, 0, 0), h * Mat3::diag(0, 1, 1), h * Mat3{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}}) {
    t.residual(ax.distance(e));
  }
  for (int k : {1, -1, 4, -7}) {
    const EquivariantBasis b = solve_equivariant_basis(IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(k));
    if (b.dimension == 1) {
      t.residual((b.basis[0] - Mat3::diag(1, 0, 0)).max_abs());
    } else {
      t.check(false);
    }
  }
  const EquivariantBasis iso = solve_equivariant_basis(IsotropyClass::isotropic(), LiftSpec::metric());
  if (iso.dimension == 1) {
    t.residual((iso.basis[0] - (1.0 / std::sqrt(3.0)) * Mat3::identity()).max_abs());
  } else {
    t.check(false);
  }
  return t.done();
}

SuiteResult axial_moduli(std::uint64_t seed, Scale scale) {
  Tally t("axial-moduli", 9, 1e-10);
  const std::size_t n = scaled(1000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 9), i);
    const double a = rng.normal();
    const double b = rng.normal();
    const double c = rng.normal();
    const Mat3 l{{a, 0, 0}, {0, b, -c}, {0, c, b}};
    const AxialModulus base = axial_canonical(l);
    for (int k = 0; k < 4; ++k) {
      const AxialModulus moved = axial_canonical(axial_gauge(rng.uniform(0.0, kTwoPi), l));
      t.residual(std::max(std::abs(base.a - moved.a), std::abs(base.r - moved.r)));
      t.check(moved.r >= 0.0);
    }
    t.check(base.r >= 0.0);
  }
  return t.done();
}

SuiteResult rho_bijection(std::uint64_t seed, Scale scale) {
  Tally t("rho-orbit-bijection", 10, 0.0);
  const std::size_t n = scaled(1000, scale);
  std::size_t disagreements = 0;
  std::size_t equivalent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 10), i);
    Mat3 l = rng.gaussian_mat3();
    Mat3 lp;
    switch (i % 4) {
      case 0: lp = rng.rotation().matrix() * l; break;
      case 1: lp = rng.gaussian_mat3(); break;
      case 2:
        l.set_col(1, rng.normal() * l.col(0));
        lp = -l;
        break;
      default: lp = -l; break;
    }
    const bool before = bianchi_equiv(l, lp);
    const bool after = bianchi_equiv(su2_to_so3_class(l), su2_to_so3_class(lp));
    if (before != after) ++disagreements;
    if (before) ++equivalent;
    t.check(before == after);
  }
  t.note("disagreements=" + std::to_string(disagreements));
  t.note("equivalent_pairs=" + std::to_string(equivalent));
  return t.done();
}

std::uint64_t fnv1a(const std::vector<std::string>& lines) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const std::string& l : lines) {
    for (unsigned char ch : l + "\n") {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

SuiteResult batch_determinism(std::uint64_t seed, Scale scale) {
  Tally t("cli-determinism", 11, 0.0);
  const std::size_t n = scaled(10000, scale);
  std::vector<std::string> input;
  input.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 11), i);
    input.push_back(serialize({{"case", "bianchi"}, {"matrix", to_json(mixed_rank(rng, i))}}));
  }
  BatchOptions parallel;
  parallel.command = Command::Canonicalize;
  parallel.jobs = 0;
  parallel.seed = seed;
  BatchOptions serial = parallel;
  serial.jobs = 1;
  const BatchResult first = run_batch(input, parallel);
  const BatchResult second = run_batch(input, serial);
  t.check(first.lines.size() == n && second.lines.size() == n);
  t.check(!first.any_failed && !second.any_failed);
  std::size_t differing = 0;
  for (std::size_t i = 0; i < std::min(first.lines.size(), second.lines.size()); ++i) {
    if (first.lines[i] != second.lines[i]) ++differing;
  }
  t.check(differing == 0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(first.lines)));
  t.note(std::string("fnv1a=") + buf);
  t.note("records=" + std::to_string(n));
  t.note("differing_lines=" + std::to_string(differing));
  return t.done();
}

// ---- module suites -----------------------------------------------------------

SuiteResult eigen_reconstruction(std::uint64_t seed, Scale scale) {
  Tally t("numerics.eigen-reconstruction", 0, kCfg.eps_recon);
  const std::size_t n = scaled(10000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 101), i);
    const Mat3 g = rng.gaussian_mat3();
    const Sym3 s = Sym3::symmetrized(g + g.transpose());
    const EigenSystem e = sym_eigen(s);
    const double scale_f = std::max(1.0, s.mat().frobenius());
    t.residual((e.reconstruct() - s.mat()).frobenius() / scale_f);
    t.residual((e.vectors.transpose() * e.vectors - Mat3::identity()).max_abs());
    t.check(e.values[0] <= e.values[1] && e.values[1] <= e.values[2]);
  }
  return t.done();
}

SuiteResult psd_square(std::uint64_t seed, Scale scale) {
  Tally t("numerics.psd-square", 0, 1e-10);
  const std::size_t n = scaled(10000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 102), i);
    const Mat3 m = mixed_rank(rng, i);
    const Mat3 p = psd_sqrt_factor(m).mat();
    const Mat3 mtm = m.transpose() * m;
    t.residual((p * p - mtm).frobenius() / std::max(1.0, mtm.frobenius()));
  }
  return t.done();
}

SuiteResult procrustes_recovery(std::uint64_t seed, Scale scale) {
  Tally t("numerics.procrustes-recovery", 0, 1e-10);
  const std::size_t n = scaled(1000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 103), i);
    const Mat3 m = mixed_rank(rng, i);
    const Mat3 target = rng.rotation().matrix() * m;
    const ProcrustesResult pr = procrustes_align(m, target);
    t.residual(pr.residual / std::max(1.0, m.frobenius()));
    t.check(std::abs(pr.rotation.matrix().det() - 1.0) <= 1e-12);
  }
  return t.done();
}

SuiteResult algebra_round_trips(std::uint64_t seed, Scale scale) {
  Tally t("lie.algebra-round-trips", 0, 1e-14);
  const std::size_t n = scaled(10000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 104), i);
    const Vec3 v = rng.normal_vec3();
    const double s = std::max(1.0, v.norm());
    t.residual((unhat(hat(v)) - v).norm() / s);
    t.residual((sigma_inv(sigma(v)) - v).norm() / s);
    t.residual((hat(v) - cross_matrix(v)).max_abs() / s);
  }
  return t.done();
}

SuiteResult basis_properties(std::uint64_t, Scale) {
  Tally t("wang.basis-properties", 0, 1e-10);
  const std::vector<std::pair<IsotropyClass, LiftSpec>> cases{
      {IsotropyClass::bianchi(), LiftSpec::metric()},
      {IsotropyClass::axial(AxialSign::Plus), LiftSpec::metric()},
      {IsotropyClass::axial(AxialSign::Minus), LiftSpec::metric()},
      {IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(0)},
      {IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(5)},
      {IsotropyClass::axial(AxialSign::Minus), LiftSpec::su2(-9)},
      {IsotropyClass::isotropic(), LiftSpec::metric()},
  };
  for (const auto& [iso, lift] : cases) {
    const EquivariantBasis b = solve_equivariant_basis(iso, lift);
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
      t.residual(equivariance_residual({b.basis[i], iso, lift}));
      for (std::size_t j = 0; j < b.basis.size(); ++j) {
        double d = 0.0;
        for (std::size_t k = 0; k < 9; ++k) d += b.basis[i].data()[k] * b.basis[j].data()[k];
        t.residual(std::abs(d - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  return t.done();
}

SuiteResult chart_scaling(std::uint64_t seed, Scale scale) {
  Tally t("moduli.chart-scaling", 0, 1e-8);
  const std::size_t n = scaled(10000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 105), i);
    const Mat3 m = mixed_rank(rng, i);
    const double c = std::exp(rng.uniform(-2.0, 2.0));
    const ChartPoint p = bianchi_coordinates(m);
    const ChartPoint q = bianchi_coordinates(c * m);
    t.residual(std::max((c * p.a.mat() - q.a.mat()).max_abs(), std::abs(c * p.lambda - q.lambda)));
  }
  return t.done();
}

SuiteResult isotropic_modulus(std::uint64_t seed, Scale scale) {
  Tally t("moduli.isotropic-modulus", 0, 1e-12);
  const std::size_t n = scaled(1000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 106), i);
    const double c = rng.normal();
    t.residual(std::abs(iso_modulus(c * Mat3::identity()) - c));
    bool rejected = false;
    try {
      iso_modulus(c * Mat3::identity() + Mat3::outer(rng.normal_vec3(), Vec3::unit(i % 3)));
    } catch (const NotEquivariantError&) {
      rejected = true;
    }
    t.check(rejected);
  }
  return t.done();
}

SuiteResult json_round_trip(std::uint64_t seed, Scale scale) {
  Tally t("cli.json-round-trip", 0, 0.0);
  const std::size_t n = scaled(1000, scale);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(suite_key(seed, 107), i);
    const Mat3 m = mixed_rank(rng, i);
    CommandRequest req;
    req.seed = seed;
    switch (i % 6) {
      case 0: req.command = Command::Canonicalize; req.payload = {{"case", "bianchi"}, {"matrix", to_json(m)}}; break;
      case 1: req.command = Command::Chart; req.payload = {{"matrix", to_json(m)}}; break;
      case 2: req.command = Command::Classify; req.payload = {{"matrix", to_json(m)}}; break;
      case 3: req.command = Command::Equiv; req.payload = {{"M", to_json(m)}, {"N", to_json(-m)}}; break;
      case 4: req.command = Command::IsoModulus; req.payload = {{"matrix", to_json(m)}}; break;
      default: req.command = Command::Sample; req.payload = {{"kind", "unit_quaternion"}, {"count", 2}}; break;
    }
    const ResultRecord rec = execute(req);
    const std::string text = serialize(rec.to_json());
    const ResultRecord back = ResultRecord::from_json(parse_json(text));
    t.check(back == rec);
    t.check(serialize(back.to_json()) == text);
  }
  return t.done();
}

using SuiteFn = std::function<SuiteResult(std::uint64_t, Scale)>;

const std::vector<SuiteFn>& criteria() {
  static const std::vector<SuiteFn> fns{orbit_invariance, boundary_identification, chart_bijection,
                                        stratum_correspondence, sextic, covering, differential,
                                        dimension_table, axial_moduli, rho_bijection, batch_determinism};
  return fns;
}

}  // namespace

std::optional<Scale> parse_scale(std::string_view name) {
  if (name == "quick") return Scale::Quick;
  if (name == "full") return Scale::Full;
  return std::nullopt;
}

std::size_t scaled(std::size_t full, Scale scale) {
  return scale == Scale::Full ? full : std::max<std::size_t>(1, full / 100);
}

Json SuiteResult::to_json() const {
  return {{"name", name},         {"criterion", criterion}, {"samples", samples},
          {"failures", failures}, {"worst", worst},         {"threshold", threshold},
          {"pass", pass},         {"notes", notes}};
}

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

SuiteResult acceptance_criterion(int number, std::uint64_t seed, Scale scale) {
  if (number < 1 || number > static_cast<int>(criteria().size())) {
    throw Error(ErrorCode::InvalidArgument, "no acceptance criterion " + std::to_string(number));
  }
  return criteria()[static_cast<std::size_t>(number - 1)](seed, scale);
}

std::vector<SuiteResult> acceptance_suites(std::uint64_t seed, Scale scale) {
  std::vector<SuiteResult> out;
  for (const SuiteFn& f : criteria()) out.push_back(f(seed, scale));
  return out;
}

std::vector<SuiteResult> module_suites(std::uint64_t seed, Scale scale) {
  return {eigen_reconstruction(seed, scale), psd_square(seed, scale),        procrustes_recovery(seed, scale),
          algebra_round_trips(seed, scale),  basis_properties(seed, scale),  chart_scaling(seed, scale),
          isotropic_modulus(seed, scale),    json_round_trip(seed, scale)};
}

SelftestReport run_selftest(std::uint64_t seed, Scale scale) {
  SelftestReport rep;
  rep.suites = module_suites(seed, scale);
  for (SuiteResult& s : acceptance_suites(seed, scale)) rep.suites.push_back(std::move(s));
  return rep;
}

}  // namespace invconn::cli
