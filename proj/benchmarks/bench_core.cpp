#include <benchmark/benchmark.h>

#include <vector>

#include "invconn/moduli.hpp"
#include "invconn/numerics.hpp"
#include "invconn/random.hpp"
#include "invconn/wang.hpp"

using namespace invconn;

namespace {

std::vector<Mat3> gaussians(std::size_t n) {
  std::vector<Mat3> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Rng(42, i).gaussian_mat3());
  return out;
}

void BM_SymEigen(benchmark::State& state) {
  std::vector<Sym3> inputs;
  for (const Mat3& g : gaussians(256)) inputs.push_back(Sym3::symmetrized(g + g.transpose()));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_SymEigen);

void BM_BianchiCanonical(benchmark::State& state) {
  const auto inputs = gaussians(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bianchi_canonical(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_BianchiCanonical);

void BM_BianchiCoordinates(benchmark::State& state) {
  const auto inputs = gaussians(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bianchi_coordinates(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_BianchiCoordinates);

void BM_ProcrustesAlign(benchmark::State& state) {
  const auto inputs = gaussians(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const Mat3& m = inputs[i % inputs.size()];
    const Mat3& n = inputs[(i + 1) % inputs.size()];
    ++i;
    benchmark::DoNotOptimize(procrustes_align(m, n));
  }
}
BENCHMARK(BM_ProcrustesAlign);

void BM_SolveAxialMetric(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_equivariant_basis(IsotropyClass::axial(AxialSign::Plus), LiftSpec::metric()));
  }
}
BENCHMARK(BM_SolveAxialMetric);

void BM_SolveAxialSU2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_equivariant_basis(IsotropyClass::axial(AxialSign::Plus), LiftSpec::su2(n)));
  }
}
BENCHMARK(BM_SolveAxialSU2)->Arg(1)->Arg(8)->Arg(32);

void BM_SolveIsotropic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_equivariant_basis(IsotropyClass::isotropic(), LiftSpec::metric()));
  }
}
BENCHMARK(BM_SolveIsotropic);

}  // namespace

BENCHMARK_MAIN();
