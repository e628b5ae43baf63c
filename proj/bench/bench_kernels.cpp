// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "gtrim/koszul.hpp"
#include "gtrim/linalg.hpp"
#include "gtrim/pfaffian.hpp"

using namespace gtrim;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

DenseMatrix<Zp> random_matrix(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(0, 32002);
  DenseMatrix<Zp> m(n, n, F);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Zp::from_integer(coeff(rng), F);
  }
  return m;
}

void row_reduce_bench(benchmark::State& state, Exec exec) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m, exec).rank());
  state.SetComplexityN(state.range(0));
}

void homology_bench(benchmark::State& state, Exec exec) {
  const auto a = trim_gm<Zp>(TrimChoice::xi(static_cast<int>(state.range(0)), 2), F);
  const QuotientRing<Zp> ring(a);
  for (auto _ : state) {
    const HomologyAlgebra<Zp> h(build_complex(ring), exec);
    benchmark::DoNotOptimize(h.ranks());
  }
}

}  // namespace

BENCHMARK_CAPTURE(row_reduce_bench, serial, Exec::Serial)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(row_reduce_bench, parallel, Exec::Parallel)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(homology_bench, serial, Exec::Serial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homology_bench, parallel, Exec::Parallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
