#include <benchmark/benchmark.h>

#include "qfano/basket.hpp"
#include "qfano/eliminate.hpp"
#include "qfano/lb.hpp"
#include "qfano/search.hpp"

using namespace qfano;

static void BM_EnumerateR(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_R());
}
BENCHMARK(BM_EnumerateR);

static void BM_Search(benchmark::State& state) {
  auto mode = state.range(0) ? SearchMode::Equal : SearchMode::Greater;
  int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_search(66, mode, workers));
}
BENCHMARK(BM_Search)->Args({0, 1})->Args({0, 8})->Args({1, 1})->Unit(benchmark::kMillisecond);

static void BM_LB(benchmark::State& state) {
  auto all = enumerate_R();
  for (auto _ : state) {
    long acc = 0;
    for (const auto& R : all) {
      LBContext ctx(R);
      for (long N = 2; N <= 24; ++N) acc += lb(ctx, N);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_LB)->Unit(benchmark::kMillisecond);

static void BM_FullPipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_full_pipeline(1));
}
BENCHMARK(BM_FullPipeline)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
