#include <benchmark/benchmark.h>

#include <rainbow/count_table.hpp>
#include <rainbow/distribution.hpp>

using namespace rainbow;

static void BM_BuildTable(benchmark::State& state) {
  const int horizon = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto table = CountTable::build({1, 4}, horizon);
    benchmark::DoNotOptimize(table.structures(horizon));
  }
  state.SetComplexityN(horizon);
}
BENCHMARK(BM_BuildTable)->Arg(200)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

static void BM_ExactLongestPmf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto table = CountTable::build({1, 1}, n);
  for (auto _ : state) {
    auto dist = exact_longest_pmf(table, n);
    benchmark::DoNotOptimize(dist.pmf.size());
  }
}
BENCHMARK(BM_ExactLongestPmf)->Arg(100)->Arg(200)->Arg(400);

static void BM_KRainbowPmf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto table = CountTable::build({1, 1}, n);
  for (auto _ : state) {
    auto dist = exact_k_rainbow_pmf(table, n, 2);
    benchmark::DoNotOptimize(dist.pmf.size());
  }
}
BENCHMARK(BM_KRainbowPmf)->Arg(100)->Arg(200)->Arg(400);
