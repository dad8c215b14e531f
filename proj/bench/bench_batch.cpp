#include <benchmark/benchmark.h>

#include "cnn/batch.hpp"

namespace {

cnn::BatchConfig config_for(const benchmark::State& state) {
  cnn::BatchConfig config;
  config.count = static_cast<std::size_t>(state.range(0));
  config.n_segments = 12;
  config.coord_bound = 3;
  return config;
}

void BM_VerifySerial(benchmark::State& state) {
  const cnn::BatchConfig config = config_for(state);
  for (auto _ : state) {
    cnn::BatchSummary summary = cnn::verify_random_serial(config);
    benchmark::DoNotOptimize(summary.failures);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyParallel(benchmark::State& state) {
  const cnn::BatchConfig config = config_for(state);
  for (auto _ : state) {
    cnn::BatchSummary summary = cnn::verify_random_parallel(config);
    benchmark::DoNotOptimize(summary.failures);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = cnn::batch_thread_count();
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
