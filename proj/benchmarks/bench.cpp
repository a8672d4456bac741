#include <benchmark/benchmark.h>

#include <random>

#include "cubik/engine.hpp"
#include "cubik/invariants.hpp"
#include "cubik/lift.hpp"
#include "cubik/obstruct.hpp"

using namespace cubik;

static Grid sample_grid(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> x(n), o(n);
  std::iota(x.begin(), x.end(), 0);
  for (;;) {
    std::shuffle(x.begin(), x.end(), rng);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    bool clash = false;
    for (int r = 0; r < n; ++r)
      if (x[r] == o[r]) clash = true;
    if (clash) continue;
    Grid g(n, x, o);
    if (component_count(g) == 1) return g;
  }
}

static void BM_Bracket(benchmark::State& state) {
  Grid g = sample_grid((int)state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(g));
}
BENCHMARK(BM_Bracket)->Arg(5)->Arg(7)->Arg(9);

static void BM_Filter(benchmark::State& state) {
  Grid g = sample_grid((int)state.range(0), 11);
  for (auto _ : state) benchmark::DoNotOptimize(filter(g));
}
BENCHMARK(BM_Filter)->Arg(5)->Arg(7)->Arg(9);

static void BM_LiftExists(benchmark::State& state) {
  Grid g = sample_grid((int)state.range(0), 13);
  for (auto _ : state) benchmark::DoNotOptimize(lift_exists(g));
}
BENCHMARK(BM_LiftExists)->Arg(5)->Arg(7)->Arg(9);

static void BM_Enumerate(benchmark::State& state) {
  EnumSpec spec;
  spec.n = (int)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_grids(spec, {}));
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_StandardJones(benchmark::State& state) {
  Grid g = standard_diagram(7, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(jones(g));
}
BENCHMARK(BM_StandardJones);

BENCHMARK_MAIN();
