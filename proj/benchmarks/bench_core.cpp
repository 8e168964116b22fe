#include <random>

#include <benchmark/benchmark.h>

#include "lieelem/verify.hpp"

using namespace lieelem;

namespace {

QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
  return m;
}

void BM_det(benchmark::State& state) {
  const QMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_det)->Arg(4)->Arg(8)->Arg(16);

void BM_charpoly(benchmark::State& state) {
  const QMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_charpoly)->Arg(4)->Arg(8)->Arg(16);

void BM_sdet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QMatrix a = random_matrix(n, 3);
  const QMatrix b = random_matrix(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(sdet(a, b));
}
BENCHMARK(BM_sdet)->Arg(4)->Arg(6)->Arg(8);

void BM_symbolic_mtt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = PairWeights<MultiPoly>::symbolic(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_mtt(n, w));
}
BENCHMARK(BM_symbolic_mtt)->Arg(3)->Arg(4);

void BM_lie_space(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lie_space(n).dim());
}
BENCHMARK(BM_lie_space)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_phi_table(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PhiTable t(n, n - 1);
    benchmark::DoNotOptimize(t.entries().size());
  }
}
BENCHMARK(BM_phi_table)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_verify_main(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MainTheoremTables tables(n);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_main(n, random_quad_weights(n, seed++), tables).status);
}
BENCHMARK(BM_verify_main)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
