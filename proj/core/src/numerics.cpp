#include "invconn/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "invconn/jacobi.hpp"

namespace invconn {

namespace {

// Any unit vector orthogonal to the unit vector u.
Vec3 orthogonal_unit(const Vec3& u) {
  std::size_t smallest = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(u[i]) < std::abs(u[smallest])) smallest = i;
  Vec3 w = u.cross(Vec3::unit(smallest));
  return (1.0 / w.norm()) * w;
}

}  // namespace

Mat3 EigenSystem::reconstruct() const {
  Mat3 d = Mat3::diag(values[0], values[1], values[2]);
  return vectors * d * vectors.transpose();
}

EigenSystem sym_eigen(const Sym3& s) {
  const auto res = jacobi_eigen<3>(s.mat().data());
  EigenSystem out;
  out.values = res.values;
  out.vectors = Mat3(res.vectors);
  return out;
}

EigenSystem sym_eigen(const Mat3& m, const ToleranceConfig& cfg) {
  return sym_eigen(Sym3::from(m, cfg.eps_sym));
}

Svd3 svd(const Mat3& m) {
  const EigenSystem gram = sym_eigen(Sym3::symmetrized(m.transpose() * m));

  Svd3 out;
  std::array<Vec3, 3> v;
  std::array<Vec3, 3> mv;
  for (std::size_t k = 0; k < 3; ++k) {
    v[k] = gram.vectors.col(2 - k);  // descending
    mv[k] = m * v[k];
    out.s[k] = mv[k].norm();
  }
  // Singular values from ‖M·v‖ can come out in a slightly different order
  // than the Gram eigenvalues when they nearly coincide.
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return out.s[i] > out.s[j]; });
  const std::array<double, 3> s_sorted{out.s[order[0]], out.s[order[1]], out.s[order[2]]};
  const std::array<Vec3, 3> v_sorted{v[order[0]], v[order[1]], v[order[2]]};
  const std::array<Vec3, 3> mv_sorted{mv[order[0]], mv[order[1]], mv[order[2]]};
  out.s = s_sorted;

  const double noise = 1e-14 * std::max(out.s[0], 1e-300);
  Vec3 u0 = out.s[0] > 0.0 ? (1.0 / out.s[0]) * mv_sorted[0] : Vec3::unit(0);

  Vec3 w = mv_sorted[1] - u0.dot(mv_sorted[1]) * u0;
  Vec3 u1 = w.norm() > noise && out.s[1] > noise ? (1.0 / w.norm()) * w : orthogonal_unit(u0);

  Vec3 u2 = u0.cross(u1);
  if (out.s[2] > noise && u2.dot(mv_sorted[2]) < 0.0) u2 = -u2;

  out.u = Mat3::from_columns(u0, u1, u2);
  out.v = Mat3::from_columns(v_sorted[0], v_sorted[1], v_sorted[2]);
  return out;
}

PolarFactor polar_psd(const Mat3& m) {
  // Singular values as ‖M·v‖ rather than √eig(MᵀM): the latter loses half the
  // digits on singular values near zero.
  const EigenSystem gram = sym_eigen(Sym3::symmetrized(m.transpose() * m));
  PolarFactor out;
  Mat3 p;
  for (std::size_t k = 0; k < 3; ++k) {
    const Vec3 vk = gram.vectors.col(k);
    out.singular_values[k] = (m * vk).norm();
    p += out.singular_values[k] * Mat3::outer(vk, vk);
  }
  std::sort(out.singular_values.begin(), out.singular_values.end());
  out.p = Sym3::symmetrized(p);
  return out;
}

Sym3 psd_sqrt_factor(const Mat3& m) { return polar_psd(m).p; }

CharInvariants char_invariants(const Mat3& m) {
  const double tr = m.trace();
  const double tr_sq = (m * m).trace();
  return {tr, 0.5 * (tr * tr - tr_sq), m.det()};
}

int numeric_rank(const Mat3& m, const ToleranceConfig& cfg) {
  const Svd3 d = svd(m);
  const double threshold = cfg.eps_rank * std::max(1.0, d.s[0]);
  return static_cast<int>(std::count_if(d.s.begin(), d.s.end(),
                                        [threshold](double s) { return s > threshold; }));
}

ProcrustesResult procrustes_align(const Mat3& m, const Mat3& n) {
  const Svd3 d = svd(n * m.transpose());
  const double flip = (d.u * d.v.transpose()).det() < 0.0 ? -1.0 : 1.0;
  const Mat3 r = d.u * Mat3::diag(1.0, 1.0, flip) * d.v.transpose();
  return {SO3Element::unchecked(r), (r * m - n).frobenius()};
}

}  // namespace invconn
