// Serial reference against the OpenMP trial loop.

#include <benchmark/benchmark.h>

#include "genform/harness/runner.hpp"

namespace {

using namespace genform::harness;

GenConfig bench_config(int n) {
  GenConfig cfg;
  cfg.seed = 1;
  cfg.dimension = n;
  return cfg;
}

const char* const ids[] = {"P4", "P10", "P13", "P14"};

void BM_serial(benchmark::State& state) {
  const char* id = ids[state.range(0)];
  const auto cfg = bench_config(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(run_identity_serial(id, cfg, 64));
  state.SetLabel(id);
}

void BM_parallel(benchmark::State& state) {
  const char* id = ids[state.range(0)];
  const auto cfg = bench_config(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(run_identity(id, cfg, 64));
  state.SetLabel(id);
}

BENCHMARK(BM_serial)->ArgsProduct({{0, 1, 2, 3}, {2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->ArgsProduct({{0, 1, 2, 3}, {2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
