#include <benchmark/benchmark.h>

#include <rainbow/sampler.hpp>

using namespace rainbow;

static void BM_SampleStructure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto table = CountTable::build({1, 1}, n);
  SamplerContext ctx(table, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.sample(n).arcs().size());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleStructure)->Arg(50)->Arg(200)->Arg(1000);

static void BM_SampleBatchThreaded(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  auto table = CountTable::build({1, 1}, 400);
  for (auto _ : state) {
    auto stats = sample_batch(table, 400, 4096, {}, 7, threads);
    benchmark::DoNotOptimize(stats.mean_longest());
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_SampleBatchThreaded)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
