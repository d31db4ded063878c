// Head-to-head benchmarks of the three non-emptiness checkers.
#include <benchmark/benchmark.h>

#include "tbuchi/checker.hpp"
#include "tbuchi/generators.hpp"

using namespace tbuchi;

namespace {

void bm_optimized_an(benchmark::State& state) {
  const Tba a = gen_an(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_optimized(a));
}

void bm_gzg_an(benchmark::State& state) {
  const Tba a = gen_an(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_gzg(a));
}

void bm_snz_an(benchmark::State& state) {
  const Tba a = gen_an(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_snz(a));
}

void bm_optimized_fischer(benchmark::State& state) {
  const Tba a = gen_fischer(static_cast<unsigned>(state.range(0)), FischerVariant::liveness);
  for (auto _ : state) benchmark::DoNotOptimize(check_optimized(a));
}

void bm_gzg_fischer(benchmark::State& state) {
  const Tba a = gen_fischer(static_cast<unsigned>(state.range(0)), FischerVariant::liveness);
  for (auto _ : state) benchmark::DoNotOptimize(check_gzg(a));
}

void bm_snz_fischer(benchmark::State& state) {
  const Tba a = gen_fischer(static_cast<unsigned>(state.range(0)), FischerVariant::liveness);
  for (auto _ : state) benchmark::DoNotOptimize(check_snz(a));
}

}  // namespace

BENCHMARK(bm_optimized_an)->DenseRange(2, 8, 2);
BENCHMARK(bm_gzg_an)->DenseRange(2, 8, 2);
BENCHMARK(bm_snz_an)->DenseRange(2, 6, 2);
BENCHMARK(bm_optimized_fischer)->Arg(2)->Arg(3);
BENCHMARK(bm_gzg_fischer)->Arg(2)->Arg(3);
BENCHMARK(bm_snz_fischer)->Arg(2)->Arg(3);
