#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "invconn/error.hpp"

namespace invconn {

template <std::size_t N>
struct JacobiResult {
  std::array<double, N> values{};       // ascending
  std::array<double, N * N> vectors{};  // row-major, eigenvectors in columns
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for a dense symmetric N×N matrix (row-major).
///
/// Sweeps until the off-diagonal Frobenius norm is at most
/// `rel_tol * ‖A‖_F`, throwing NoConvergence after `max_sweeps`. Eigenvalues
/// come back ascending; ties keep their diagonal order. Each eigenvector is
/// flipped so that its largest-magnitude component (lowest index on ties) is
/// nonnegative.
///
/// Negating the input negates the eigenvalues bit-for-bit: every rotation is
/// computed from ratios of entries.
template <std::size_t N>
JacobiResult<N> jacobi_eigen(std::array<double, N * N> a, double rel_tol = 1e-14,
                             int max_sweeps = 50) {
  auto at = [&a](std::size_t r, std::size_t c) -> double& { return a[N * r + c]; };

  std::array<double, N * N> v{};
  for (std::size_t i = 0; i < N; ++i) v[N * i + i] = 1.0;

  double frob2 = 0.0;
  for (double x : a) frob2 += x * x;
  const double target = rel_tol * std::sqrt(frob2);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (r != c) s += at(r, c) * at(r, c);
    return std::sqrt(s);
  };

  JacobiResult<N> out;
  int sweep = 0;
  while (off_norm() > target) {
    if (sweep == max_sweeps) {
      throw Error(ErrorCode::NoConvergence, "Jacobi eigensolver exceeded its sweep limit");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- A J
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        // A <- J^T A
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        // V <- V J
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v[N * k + p];
          const double vkq = v[N * k + q];
          v[N * k + p] = c * vkp - s * vkq;
          v[N * k + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  out.sweeps = sweep;

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return at(i, i) < at(j, j); });

  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t src = order[k];
    out.values[k] = at(src, src);
    std::size_t big = 0;
    for (std::size_t r = 1; r < N; ++r)
      if (std::abs(v[N * r + src]) > std::abs(v[N * big + src])) big = r;
    const double sign = v[N * big + src] < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < N; ++r) out.vectors[N * r + k] = sign * v[N * r + src];
  }
  return out;
}

}  // namespace invconn
