#include <benchmark/benchmark.h>

#include <rainbow/asymptotics.hpp>
#include <rainbow/count_table.hpp>

using namespace rainbow;

static void BM_FindRho(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_rho({2, 4}, digits));
  }
}
BENCHMARK(BM_FindRho)->Arg(30)->Arg(100)->Arg(200);

static void BM_SingularConstants(benchmark::State& state) {
  for (auto _ : state) {
    auto k = singular_constants({4, 4}, 30);
    benchmark::DoNotOptimize(k.alpha);
  }
}
BENCHMARK(BM_SingularConstants);

static void BM_LimitCdf(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  auto table = CountTable::build({4, 4}, t);
  auto k = singular_constants({4, 4}, 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(limit_longest_cdf(k, table, t));
  }
}
BENCHMARK(BM_LimitCdf)->Arg(100)->Arg(500);
