// Micro-benchmarks for the difference-bound-matrix operations.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tbuchi/dbm.hpp"

using namespace tbuchi;

namespace {

// Zones as they arise during exploration: random walks over the symbolic
// operators from the origin, one fixed seed so every run measures the same
// workload.
std::vector<Zone> workload(unsigned clocks, int max_constant, std::size_t count) {
  std::mt19937 gen(12345);
  std::uniform_int_distribution<int> op(0, 3);
  std::uniform_int_distribution<int> clock(1, static_cast<int>(clocks));
  std::uniform_int_distribution<int> rel(0, 4);
  std::uniform_int_distribution<int> constant(0, max_constant);
  std::vector<Zone> zones;
  zones.reserve(count);
  while (zones.size() < count) {
    Zone z = Zone::origin(clocks + 1);
    const int steps = std::uniform_int_distribution<int>(2, 10)(gen);
    for (int i = 0; i < steps; ++i) {
      switch (op(gen)) {
        case 0: z = up(z); break;
        case 1: {
          const AtomicConstraint atom{static_cast<ClockId>(clock(gen)),
                                      static_cast<Rel>(rel(gen)), constant(gen)};
          if (auto g = and_guard(z, {atom})) z = *g;
          break;
        }
        case 2: z = reset(z, ClockSet::single(static_cast<ClockId>(clock(gen)))); break;
        default: z = approx_m(z, max_constant); break;
      }
    }
    zones.push_back(std::move(z));
  }
  return zones;
}

void bm_up(benchmark::State& state) {
  const auto zones = workload(static_cast<unsigned>(state.range(0)), 5, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(up(zones[i]));
    i = (i + 1) % zones.size();
  }
}

void bm_guard(benchmark::State& state) {
  const unsigned clocks = static_cast<unsigned>(state.range(0));
  const auto zones = workload(clocks, 5, 64);
  const Guard g{AtomicConstraint{1, Rel::le, 4}, AtomicConstraint{clocks, Rel::ge, 1}};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(and_guard(zones[i], g));
    i = (i + 1) % zones.size();
  }
}

void bm_reset(benchmark::State& state) {
  const unsigned clocks = static_cast<unsigned>(state.range(0));
  const auto zones = workload(clocks, 5, 64);
  const ClockSet set = ClockSet::single(1) | ClockSet::single(clocks);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reset(zones[i], set));
    i = (i + 1) % zones.size();
  }
}

void bm_approx(benchmark::State& state) {
  const auto zones = workload(static_cast<unsigned>(state.range(0)), 5, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_m(zones[i], 3));
    i = (i + 1) % zones.size();
  }
}

void bm_intersect(benchmark::State& state) {
  const auto zones = workload(static_cast<unsigned>(state.range(0)), 5, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(zones[i], zones[(i + 7) % zones.size()]));
    i = (i + 1) % zones.size();
  }
}

void bm_canonical(benchmark::State& state) {
  const unsigned dim = static_cast<unsigned>(state.range(0)) + 1;
  for (auto _ : state) {
    Dbm d(dim);
    for (unsigned i = 1; i < dim; ++i) d.tighten(i, 0, Bound::weak(static_cast<int>(i)));
    benchmark::DoNotOptimize(Zone::canonical(std::move(d)));
  }
}

}  // namespace

BENCHMARK(bm_up)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_guard)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_reset)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_approx)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_intersect)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_canonical)->Arg(2)->Arg(4)->Arg(8)->Arg(16);
