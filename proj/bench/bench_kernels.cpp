// Serial reference vs OpenMP kernels.
//
//   ./bench_kernels --benchmark_filter=MonteCarlo
//
// Arg(0) of the parallel variants is the worker count.

#include <benchmark/benchmark.h>

#include "noisy_search/exact_oracle.hpp"
#include "noisy_search/monte_carlo.hpp"

namespace ns = noisy_search;

namespace {

constexpr std::uint64_t kTrials = 1 << 20;

void BM_MonteCarloSerial(benchmark::State& state) {
  const ns::SearchParams params(1 << 16, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ns::monte_carlo_serial(params, ns::TargetPolicy::uniform(), kTrials, 42));
  }
  state.SetItemsProcessed(state.iterations() * kTrials);
}
BENCHMARK(BM_MonteCarloSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_MonteCarloParallel(benchmark::State& state) {
  const ns::SearchParams params(1 << 16, 0.1);
  const ns::MonteCarloOptions options{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ns::monte_carlo(params, ns::TargetPolicy::uniform(), kTrials, 42, options));
  }
  state.SetItemsProcessed(state.iterations() * kTrials);
}
BENCHMARK(BM_MonteCarloParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ExactAverageSerial(benchmark::State& state) {
  const ns::SearchParams params(static_cast<ns::Index>(state.range(0)), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ns::exact_average_error_serial(params));
  }
}
BENCHMARK(BM_ExactAverageSerial)->Arg(1024)->Arg(4096)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ExactAverageParallel(benchmark::State& state) {
  const ns::SearchParams params(static_cast<ns::Index>(state.range(1)), 0.1);
  const ns::OracleOptions options{ns::kDefaultAverageCap, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ns::exact_average_error(params, options));
  }
}
BENCHMARK(BM_ExactAverageParallel)
    ->ArgsProduct({{1, 2, 4, 8}, {1024, 4096}})
    ->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
