// Serial reference vs OpenMP path for the verification campaign.

#include <benchmark/benchmark.h>

#include "qepi/campaign.hpp"

namespace {

qepi::CampaignConfig config(int d) {
  qepi::CampaignConfig cfg;
  cfg.dims = {d};
  cfg.trials = 500;
  cfg.seed = 1;
  cfg.lemma_grid = 0;
  return cfg;
}

void BM_Verify(benchmark::State& state, qepi::Execution exec) {
  const qepi::CampaignConfig cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = qepi::run_verification(cfg, exec);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * cfg.trials);
}

void BM_Bounds(benchmark::State& state, qepi::Execution exec) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto checks = qepi::run_bounds_soundness({d}, 1000, 1, exec);
    benchmark::DoNotOptimize(checks);
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Verify, serial, qepi::Execution::Serial)
    ->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Verify, parallel, qepi::Execution::Parallel)
    ->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Bounds, serial, qepi::Execution::Serial)
    ->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Bounds, parallel, qepi::Execution::Parallel)
    ->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
