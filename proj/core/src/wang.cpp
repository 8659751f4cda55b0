#include "invconn/wang.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "invconn/jacobi.hpp"
#include "invconn/random.hpp"

namespace invconn {

namespace {

constexpr std::uint64_t kIsotropicSampleSeed = 0x150713C5EEDULL;
constexpr int kIsotropicSamples = 50;
constexpr int kBaseGrid = 17;

double frobenius_dot(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 9; ++i) s += a.data()[i] * b.data()[i];
  return s;
}

Mat3 basis_matrix(std::size_t k) {
  Mat3 e;
  e(k / 3, k % 3) = 1.0;
  return e;
}

Mat3 target_for(const LiftSpec& lift, const Mat3& source, const SU2Element& mu) {
  if (lift.flavor == LiftSpec::Flavor::MetricCompatible) return source;
  return covering_rho(mu).matrix();
}

// Reduced row-echelon form of the rows, then Gram-Schmidt in row order.
std::vector<Mat3> canonical_basis(std::vector<std::array<double, 9>> rows) {
  const std::size_t k = rows.size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < 9 && pivot_row < k; ++col) {
    std::size_t best = pivot_row;
    for (std::size_t r = pivot_row + 1; r < k; ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[best][col])) best = r;
    if (std::abs(rows[best][col]) < 1e-8) continue;
    std::swap(rows[best], rows[pivot_row]);
    const double inv = 1.0 / rows[pivot_row][col];
    for (double& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == pivot_row) continue;
      const double f = rows[r][col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < 9; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  for (auto& row : rows)
    for (double& x : row)
      if (std::abs(x) < 1e-13) x = 0.0;

  std::vector<Mat3> out;
  for (const auto& row : rows) {
    Mat3 b(row);
    for (const Mat3& prev : out) b -= frobenius_dot(prev, b) * prev;
    const double n = b.frobenius();
    if (n < 1e-8) continue;
    out.push_back((1.0 / n) * b);
  }
  return out;
}

}  // namespace

std::string describe(const IsotropyClass& iso) {
  switch (iso.kind) {
    case IsotropyClass::Kind::Bianchi: return "bianchi";
    case IsotropyClass::Kind::Axial: return iso.sign == AxialSign::Plus ? "axial+" : "axial-";
    case IsotropyClass::Kind::Isotropic: return "isotropic";
  }
  return "unknown";
}

std::string describe(const LiftSpec& lift) {
  if (lift.flavor == LiftSpec::Flavor::MetricCompatible) return "metric";
  return "su2(" + std::to_string(lift.n) + ")";
}

void validate(const IsotropyClass& iso, const LiftSpec& lift) {
  if (lift.flavor != LiftSpec::Flavor::SU2Lift || lift.n == 0) return;
  if (iso.kind == IsotropyClass::Kind::Bianchi) {
    throw Error(ErrorCode::InvalidLift, "trivial isotropy admits only the trivial lift (n = 0)");
  }
  if (iso.kind == IsotropyClass::Kind::Isotropic) {
    throw Error(ErrorCode::InvalidLift, "SO(3) isotropy admits only the trivial SU(2) lift (n = 0)");
  }
}

int axial_grid_size(int n) {
  const int m = std::abs(n);
  // Constraint frequencies are 0, 1, 2|n| and 2|n|±1; an N-point grid aliases
  // a frequency f to zero when N divides f.
  return 2 * m + 1 < kBaseGrid ? kBaseGrid : 4 * m + 3;
}

std::vector<ConstraintPair> constraint_set(const IsotropyClass& iso, const LiftSpec& lift) {
  validate(iso, lift);
  std::vector<ConstraintPair> out;
  switch (iso.kind) {
    case IsotropyClass::Kind::Bianchi:
      break;
    case IsotropyClass::Kind::Axial: {
      const int grid = axial_grid_size(lift.n);
      out.reserve(static_cast<std::size_t>(grid));
      for (int k = 0; k < grid; ++k) {
        const U1Element h(kTwoPi * k / grid);
        const Mat3 source = lambda_axial(iso.sign, h).matrix();
        out.push_back({source, target_for(lift, source, mu_n(lift.n, h))});
      }
      break;
    }
    case IsotropyClass::Kind::Isotropic: {
      const std::array<Mat3, 3> quarter_turns{
          Mat3{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}},
          Mat3{{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}},
          Mat3{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}},
      };
      // μ is trivial for the only admissible SU(2) lift.
      const SU2Element one;
      for (const Mat3& r : quarter_turns) out.push_back({r, target_for(lift, r, one)});
      for (int i = 0; i < kIsotropicSamples; ++i) {
        const Mat3 r = Rng(kIsotropicSampleSeed, static_cast<std::uint64_t>(i)).rotation().matrix();
        out.push_back({r, target_for(lift, r, one)});
      }
      break;
    }
  }
  return out;
}

ResidualReport equivariance_report(const WangParameter& p) {
  ResidualReport rep;
  rep.witness = Mat3::identity();
  for (const auto& c : constraint_set(p.isotropy, p.lift)) {
    const double r = (p.lambda * c.source - c.target * p.lambda).frobenius();
    if (r > rep.residual) {
      rep.residual = r;
      rep.witness = c.source;
    }
  }
  return rep;
}

double equivariance_residual(const WangParameter& p) { return equivariance_report(p).residual; }

Mat3 EquivariantBasis::project(const Mat3& m) const {
  Mat3 p;
  for (const Mat3& b : basis) p += frobenius_dot(b, m) * b;
  return p;
}

double EquivariantBasis::distance(const Mat3& m) const { return (m - project(m)).frobenius(); }

EquivariantBasis solve_equivariant_basis(const IsotropyClass& iso, const LiftSpec& lift,
                                         const ToleranceConfig& cfg) {
  const auto constraints = constraint_set(iso, lift);

  std::array<double, 81> gram{};
  for (const auto& c : constraints) {
    // Column k holds vec(E_k·source − target·E_k).
    std::array<std::array<double, 9>, 9> cols{};
    for (std::size_t k = 0; k < 9; ++k) {
      const Mat3 e = basis_matrix(k);
      cols[k] = (e * c.source - c.target * e).data();
    }
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = i; j < 9; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < 9; ++r) s += cols[i][r] * cols[j][r];
        gram[9 * i + j] += s;
        if (i != j) gram[9 * j + i] += s;
      }
  }

  const auto eig = jacobi_eigen<9>(gram);
  const double threshold = cfg.eps_rank * eig.values[8];

  std::vector<std::array<double, 9>> null_rows;
  for (std::size_t k = 0; k < 9; ++k) {
    if (eig.values[k] > threshold) continue;
    std::array<double, 9> row{};
    for (std::size_t r = 0; r < 9; ++r) row[r] = eig.vectors[9 * r + k];
    null_rows.push_back(row);
  }

  EquivariantBasis out;
  out.basis = canonical_basis(std::move(null_rows));
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace invconn
