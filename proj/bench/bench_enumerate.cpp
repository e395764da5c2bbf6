// Serial reference sweep against the OpenMP sweep on the mandatory catalogs.

#include <benchmark/benchmark.h>

#include "gfchordal/enumerate.hpp"

namespace {

void run(benchmark::State& state, bool parallel) {
  const int r = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  const gfc::GroupAction group = gfc::group_elements(r, gfc::field_of(q));
  for (auto _ : state) {
    auto reps = parallel ? gfc::orbit_representatives(group) : gfc::orbit_representatives_serial(group);
    benchmark::DoNotOptimize(reps);
  }
  state.counters["subsets"] = static_cast<double>(std::uint64_t{1} << group.points());
  state.counters["group_order"] = static_cast<double>(group.order());
}

void BM_Serial(benchmark::State& state) { run(state, false); }
void BM_OpenMP(benchmark::State& state) { run(state, true); }

}  // namespace

BENCHMARK(BM_Serial)->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
