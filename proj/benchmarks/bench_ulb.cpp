#include <benchmark/benchmark.h>

#include "ulb/ulb.hpp"

namespace {

void BM_BuildRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double N = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ulb::build_rule(n, N));
}
BENCHMARK(BM_BuildRule)->Args({4, 24})->Args({10, 300})->Args({3, 1000});

void BM_ComputeUlb(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double N = static_cast<double>(state.range(1));
  const ulb::Potential h = ulb::Potential::newton(n);
  for (auto _ : state) benchmark::DoNotOptimize(ulb::compute_ulb(n, N, h));
}
BENCHMARK(BM_ComputeUlb)->Args({4, 24})->Args({10, 300})->Unit(benchmark::kMicrosecond);

void BM_AllRoots(benchmark::State& state) {
  const auto p = ulb::JacobiParams::adjacent(6, 1, 0);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ulb::all_roots(p, degree));
}
BENCHMARK(BM_AllRoots)->Arg(10)->Arg(50)->Arg(200);

void BM_TestFunctions(benchmark::State& state) {
  const ulb::QuadratureRule r = ulb::build_rule(4, 120);
  const int j_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ulb::test_functions(r, j_max));
}
BENCHMARK(BM_TestFunctions)->Arg(20)->Arg(100);

void BM_ImproveBound(benchmark::State& state) {
  const ulb::Potential h = ulb::Potential::newton(4);
  for (auto _ : state) benchmark::DoNotOptimize(ulb::improve_bound(4, 24, h, 8));
}
BENCHMARK(BM_ImproveBound)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive is LTO bytecode from another compiler
// release, so the entry point is defined here instead.
BENCHMARK_MAIN();
