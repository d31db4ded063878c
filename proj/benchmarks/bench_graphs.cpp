// Full-exploration benchmarks for the symbolic graphs.
#include <benchmark/benchmark.h>

#include "tbuchi/automaton.hpp"
#include "tbuchi/generators.hpp"
#include "tbuchi/zone_graph.hpp"

using namespace tbuchi;

namespace {

template <class Explorer>
std::size_t sweep(const Tba& a) {
  Explorer g(a);
  g.initial();
  for (NodeId u = 0; u < g.stored(); ++u) g.successors(u);
  return g.stored();
}

void bm_zg_an(benchmark::State& state) {
  const Tba a = gen_an(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sweep<ZoneGraphExplorer>(a));
}

void bm_gzg_an(benchmark::State& state) {
  const Tba a = gen_an(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sweep<GzgExplorer>(a));
}

void bm_zg_snz_an(benchmark::State& state) {
  const Tba a = snz_transform(gen_an(static_cast<unsigned>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep<ZoneGraphExplorer>(a));
}

void bm_zg_fischer(benchmark::State& state) {
  const Tba a = gen_fischer(static_cast<unsigned>(state.range(0)), FischerVariant::mutex);
  for (auto _ : state) benchmark::DoNotOptimize(sweep<ZoneGraphExplorer>(a));
}

void bm_gzg_fischer(benchmark::State& state) {
  const Tba a = gen_fischer(static_cast<unsigned>(state.range(0)), FischerVariant::mutex);
  for (auto _ : state) benchmark::DoNotOptimize(sweep<GzgExplorer>(a));
}

}  // namespace

BENCHMARK(bm_zg_an)->DenseRange(2, 8, 2);
BENCHMARK(bm_gzg_an)->DenseRange(2, 8, 2);
BENCHMARK(bm_zg_snz_an)->DenseRange(2, 6, 2);
BENCHMARK(bm_zg_fischer)->Arg(2)->Arg(3);
BENCHMARK(bm_gzg_fischer)->Arg(2)->Arg(3);
