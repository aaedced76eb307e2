#include <benchmark/benchmark.h>

#include "gromov/gh_solver.hpp"
#include "gromov/rng.hpp"

namespace {

void BM_GhExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gromov::Lcg64 rng(123);
  const gromov::FiniteMetricSpace x = gromov::random_space(rng, n);
  const gromov::FiniteMetricSpace y = gromov::random_space(rng, n);
  std::int64_t nodes = 0;
  for (auto _ : state) {
    const gromov::GHCertificate cert = gromov::gh_exact(x, y);
    nodes = cert.nodes_explored;
    benchmark::DoNotOptimize(cert.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_Distortion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gromov::Lcg64 rng(7);
  const gromov::FiniteMetricSpace x = gromov::random_space(rng, n);
  const gromov::FiniteMetricSpace y = gromov::random_space(rng, n);
  const gromov::Correspondence full = gromov::Correspondence::full(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gromov::distortion(full, x, y));
  }
}

void BM_EnumerateMinimal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    gromov::for_each_minimal_correspondence(n, n, [&](const gromov::Correspondence&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}

}  // namespace

BENCHMARK(BM_GhExact)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Distortion)->Arg(4)->Arg(8)->Unit(benchmark::kNanosecond);
BENCHMARK(BM_EnumerateMinimal)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
