#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "samtk/scheduler.hpp"
#include "samtk/trace.hpp"

namespace {

std::vector<samtk::Flow> backlogged_flows(int count, std::int64_t frames) {
  std::vector<samtk::Flow> flows(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    samtk::FrameTrace trace;
    trace.frame_rate = 200.0;
    for (std::int64_t k = 0; k < frames; ++k)
      trace.frames.push_back({samtk::FrameKind::Unknown, 2000 + 250 * i});
    flows[static_cast<std::size_t>(i)].id = i;
    flows[static_cast<std::size_t>(i)].trace = trace;
    flows[static_cast<std::size_t>(i)].deadline_offset = 40;
    flows[static_cast<std::size_t>(i)].quantum = 1000 + 500 * i;
  }
  return flows;
}

void run_scheduler(benchmark::State& state, samtk::SchedulerKind kind) {
  const auto duration = state.range(0);
  const std::vector<samtk::Flow> flows = backlogged_flows(4, duration + 64);
  samtk::SimConfig cfg;
  cfg.capacity = 5000;  // roughly half the offered load: sustained contention
  cfg.interval_seconds = 0.005;
  cfg.duration = duration;
  cfg.scheduler = kind;
  for (auto _ : state) {
    benchmark::DoNotOptimize(samtk::simulate(flows, cfg));
  }
  state.SetItemsProcessed(state.iterations() * duration);
}

void BM_SimulateEdf(benchmark::State& state) {
  run_scheduler(state, samtk::SchedulerKind::Edf);
}
BENCHMARK(BM_SimulateEdf)->Arg(1000)->Arg(10000);

void BM_SimulateDrr(benchmark::State& state) {
  run_scheduler(state, samtk::SchedulerKind::Drr);
}
BENCHMARK(BM_SimulateDrr)->Arg(1000)->Arg(10000);

void BM_SimulateEdfDrr(benchmark::State& state) {
  run_scheduler(state, samtk::SchedulerKind::EdfDrr);
}
BENCHMARK(BM_SimulateEdfDrr)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
