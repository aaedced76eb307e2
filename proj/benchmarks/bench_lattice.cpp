#include <benchmark/benchmark.h>

#include "gromov/lattice.hpp"

namespace {

void BM_BallCount2D(benchmark::State& state) {
  const long long r = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gromov::ball_count(2, gromov::Rational{r, 1}));
  }
}

void BM_BallCount2DThreaded(benchmark::State& state) {
  const long long r = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gromov::ball_count(2, gromov::Rational{r, 1}, 4));
  }
}

void BM_ZnWindow(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gromov::zn_window(2, k).diameter());
  }
}

}  // namespace

BENCHMARK(BM_BallCount2D)->Arg(200)->Arg(500)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BallCount2DThreaded)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ZnWindow)->Arg(5)->Arg(10)->Unit(benchmark::kMicrosecond);
