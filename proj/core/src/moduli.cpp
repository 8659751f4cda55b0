#include "invconn/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace invconn {

namespace {

Mat3 scaled_identity(double s) { return Mat3::diag(s, s, s); }

Mat3 traceless_part(const Mat3& m) { return m - scaled_identity(m.trace() / 3.0); }

// Eigenvalue of smallest modulus; set to exactly zero when it is numerically
// zero relative to the spectrum.
double smallest_modulus_eigenvalue(const Sym3& s, const ToleranceConfig& cfg) {
  const auto values = sym_eigen(s).values;
  double best = values[0];
  double scale = 0.0;
  for (double v : values) {
    if (std::abs(v) < std::abs(best)) best = v;
    scale = std::max(scale, std::abs(v));
  }
  return std::abs(best) <= cfg.eps_rank * std::max(1.0, scale) ? 0.0 : best;
}

using Poly = std::vector<std::int64_t>;  // highest degree first

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// den^deg · p(num/den), exact.
std::int64_t scaled_eval(const Poly& p, std::int64_t num, std::int64_t den) {
  const std::size_t deg = p.size() - 1;
  std::int64_t total = 0;
  for (std::size_t k = 0; k <= deg; ++k) {
    std::int64_t term = p[k];
    for (std::size_t i = 0; i < deg - k; ++i) term *= num;
    for (std::size_t i = 0; i < k; ++i) term *= den;
    total += term;
  }
  return total;
}

Poly derivative(const Poly& p) {
  const std::size_t deg = p.size() - 1;
  Poly out;
  for (std::size_t k = 0; k < deg; ++k) out.push_back(p[k] * static_cast<std::int64_t>(deg - k));
  return out;
}

}  // namespace

std::string_view to_string(CanonicalSign s) noexcept {
  switch (s) {
    case CanonicalSign::Plus: return "plus";
    case CanonicalSign::Minus: return "minus";
    case CanonicalSign::Boundary: return "boundary";
  }
  return "unknown";
}

NotEquivariantError::NotEquivariantError(double residual, const Mat3& witness)
    : Error(ErrorCode::NotEquivariant,
            "matrix does not commute with SO(3): residual " + std::to_string(residual)),
      residual_(residual),
      witness_(witness) {}

ChartPoint ChartPoint::from(const Mat3& a, double lambda, const ToleranceConfig& cfg) {
  if (!a.is_finite() || !std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidArgument, "chart point has non-finite entries");
  }
  const double scale = std::max(1.0, a.max_abs());
  if ((a - a.transpose()).max_abs() > cfg.eps_sym * scale) {
    throw Error(ErrorCode::NotSymmetric, "chart component A is not symmetric");
  }
  if (std::abs(a.trace()) > cfg.eps_sym * scale) {
    throw Error(ErrorCode::NotTraceless,
                "chart component A is not traceless: tr A = " + std::to_string(a.trace()));
  }
  return {Sym3::symmetrized(a), lambda};
}

BianchiCanonical bianchi_canonical(const Mat3& m, const ToleranceConfig& cfg) {
  if (!m.is_finite()) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  const PolarFactor polar = polar_psd(m);
  const double smin = polar.singular_values[0];
  const double smax = polar.singular_values[2];
  CanonicalSign sign = CanonicalSign::Boundary;
  if (smin > cfg.eps_rank * std::max(1.0, smax)) {
    sign = m.det() > 0.0 ? CanonicalSign::Plus : CanonicalSign::Minus;
  }
  return {polar.p, sign};
}

ChartPoint phi_plus(const Sym3& psd, const ToleranceConfig& cfg) {
  return {Sym3::symmetrized(traceless_part(psd.mat())), smallest_modulus_eigenvalue(psd, cfg)};
}

ChartPoint phi_minus(const Sym3& nsd, const ToleranceConfig& cfg) {
  return {Sym3::symmetrized(-traceless_part(nsd.mat())), smallest_modulus_eigenvalue(nsd, cfg)};
}

ChartPoint bianchi_chart(const BianchiCanonical& c, const ToleranceConfig& cfg) {
  switch (c.sign) {
    case CanonicalSign::Plus: return phi_plus(c.p_psd, cfg);
    case CanonicalSign::Minus: return phi_minus(Sym3::symmetrized(-c.p_psd.mat()), cfg);
    case CanonicalSign::Boundary: {
      ChartPoint p = phi_plus(c.p_psd, cfg);
      p.lambda = 0.0;
      return p;
    }
  }
  return {};
}

BianchiCanonical bianchi_chart_inv(const ChartPoint& p, const ToleranceConfig& cfg) {
  const auto mu = sym_eigen(p.a).values;
  const double mag = std::abs(p.lambda);
  // φ₊⁻¹(A, λ) = A + (λ − µ_A)·I and −φ₋⁻¹(A, λ) = A − (λ + µ_A)·I agree:
  // both are A + (|λ| − µ_A)·I.
  const Sym3 psd = Sym3::symmetrized(p.a.mat() + scaled_identity(mag - mu[0]));
  const double smax = mu[2] - mu[0] + mag;
  CanonicalSign sign = CanonicalSign::Boundary;
  if (mag > cfg.eps_rank * std::max(1.0, smax)) {
    sign = p.lambda > 0.0 ? CanonicalSign::Plus : CanonicalSign::Minus;
  }
  return {psd, sign};
}

ChartPoint bianchi_coordinates(const Mat3& m, const ToleranceConfig& cfg) {
  return bianchi_chart(bianchi_canonical(m, cfg), cfg);
}

StratumReport diagnose_stratum(const ChartPoint& p, const ToleranceConfig& cfg) {
  StratumReport rep;
  const auto mu = sym_eigen(p.a).values;
  rep.spectrum = mu;
  const double mag = std::abs(p.lambda);
  // Spectrum of the representative A + (|λ| − µ_A)·I is µᵢ − µ₀ + |λ|.
  const double tol = cfg.eps_rank * std::max(1.0, mu[2] - mu[0] + mag);

  const CharInvariants inv = char_invariants(p.a.mat());
  const double norm = p.a.mat().frobenius();
  rep.discriminant = 27.0 * inv.det * inv.det + 4.0 * inv.e2 * inv.e2 * inv.e2;
  rep.discriminant_s1 = std::abs(rep.discriminant) <= cfg.eps_eq * std::max(1.0, std::pow(norm, 6)) &&
                        inv.det >= -cfg.eps_eq * std::max(1.0, std::pow(norm, 3));
  rep.spectral_s1 = mu[1] - mu[0] <= tol && std::abs(mu[0] + 0.5 * mu[2]) <= tol;

  if (mag > tol) {
    rep.stratum = {3};
  } else if (mu[2] - mu[0] <= tol) {
    rep.stratum = {0};
  } else if (rep.spectral_s1) {
    rep.stratum = {1};
  } else {
    rep.stratum = {2};
  }
  return rep;
}

Stratum classify_stratum(const ChartPoint& p, const ToleranceConfig& cfg) {
  return diagnose_stratum(p, cfg).stratum;
}

double chart_distance(const ChartPoint& p, const ChartPoint& q) {
  return std::max((p.a.mat() - q.a.mat()).max_abs(), std::abs(p.lambda - q.lambda));
}

bool bianchi_equiv(const Mat3& m, const Mat3& n, const ToleranceConfig& cfg) {
  const BianchiCanonical cm = bianchi_canonical(m, cfg);
  const BianchiCanonical cn = bianchi_canonical(n, cfg);
  const double scale = std::max({1.0, cm.p_psd.mat().max_abs(), cn.p_psd.mat().max_abs()});
  return chart_distance(bianchi_chart(cm, cfg), bianchi_chart(cn, cfg)) <= cfg.eps_eq * scale;
}

Mat3 su2_to_so3_class(const Mat3& lambda_su2) { return -2.0 * lambda_su2; }

AxialModulus axial_canonical(double a, double b, double c) { return {a, std::hypot(b, c)}; }

AxialModulus axial_canonical(const Mat3& lambda, const ToleranceConfig& cfg) {
  const double a = lambda(0, 0);
  const double b = 0.5 * (lambda(1, 1) + lambda(2, 2));
  const double c = 0.5 * (lambda(2, 1) - lambda(1, 2));
  const Mat3 model{{a, 0.0, 0.0}, {0.0, b, -c}, {0.0, c, b}};
  const double off = (lambda - model).frobenius();
  if (!lambda.is_finite() || off > cfg.eps_eq * std::max(1.0, lambda.frobenius())) {
    throw Error(ErrorCode::NotInSolutionSpace,
                "matrix is not of the axial form blockdiag(a, [[b, -c], [c, b]]): distance " +
                    std::to_string(off));
  }
  return axial_canonical(a, b, c);
}

Mat3 axial_gauge(double theta, const Mat3& lambda) { return x_rotation(theta).matrix() * lambda; }

AxialSU2Modulus axial_su2_modulus(int n, const Mat3& lambda, const ToleranceConfig& cfg) {
  const EquivariantBasis basis =
      solve_equivariant_basis(IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(n), cfg);
  const double off = basis.distance(lambda);
  if (!lambda.is_finite() || off > cfg.eps_eq * std::max(1.0, lambda.frobenius())) {
    throw Error(ErrorCode::NotInSolutionSpace,
                "matrix is not in the axial SU(2) solution space for n = " + std::to_string(n) +
                    ": distance " + std::to_string(off));
  }
  if (n != 0) return {n, lambda(0, 0)};
  // Trivial lift: the first column is an arbitrary vector, classified by its
  // norm under SU(2) acting through SO(3).
  return {n, lambda.col(0).norm()};
}

double iso_modulus(const Mat3& lambda, const ToleranceConfig& cfg) {
  const ResidualReport rep =
      equivariance_report({lambda, IsotropyClass::isotropic(), LiftSpec::metric()});
  const double scale = std::max(1.0, lambda.frobenius());
  if (!lambda.is_finite() || rep.residual > cfg.eps_eq * scale) {
    throw NotEquivariantError(rep.residual, rep.witness);
  }
  const double c = lambda.trace() / 3.0;
  const double off = (lambda - scaled_identity(c)).frobenius();
  if (off > cfg.eps_eq * scale) throw NotEquivariantError(off, Mat3::identity());
  return c;
}

std::array<std::int64_t, 7> sextic_from_double_roots() {
  const Poly t_minus_1{1, -1};
  const Poly t_plus_2{1, 2};
  const Poly two_t_plus_1{2, 1};
  Poly p = multiply(t_minus_1, t_minus_1);
  p = multiply(p, multiply(t_plus_2, t_plus_2));
  p = multiply(p, multiply(two_t_plus_1, two_t_plus_1));
  std::array<std::int64_t, 7> out{};
  std::copy(p.begin(), p.end(), out.begin());
  return out;
}

bool verify_s1_sextic() {
  if (sextic_from_double_roots() != kS1Sextic) return false;
  const Poly p(kS1Sextic.begin(), kS1Sextic.end());
  const Poly dp = derivative(p);
  const std::array<std::pair<std::int64_t, std::int64_t>, 3> roots{{{1, 1}, {-2, 1}, {-1, 2}}};
  for (const auto& [num, den] : roots) {
    if (scaled_eval(p, num, den) != 0 || scaled_eval(dp, num, den) != 0) return false;
  }
  return true;
}

}  // namespace invconn
