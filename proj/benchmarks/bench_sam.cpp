#include <benchmark/benchmark.h>

#include <vector>

#include "samtk/estimation.hpp"
#include "samtk/generation.hpp"
#include "samtk/prediction.hpp"
#include "samtk/sam.hpp"

namespace {

samtk::SamParams demo_params() {
  samtk::SamParams p;
  p.ar = 0.5;
  p.ma = 0.3;
  p.sar = 0.4;
  p.sma = 0.6;
  p.season = 12;
  p.sigma = 50.0;
  return p;
}

std::vector<double> demo_series(std::size_t n) {
  samtk::GenerationConfig cfg;
  cfg.length = static_cast<std::int64_t>(n);
  cfg.seed = 9001;
  cfg.init_level = 5000.0;
  return samtk::generate_series(demo_params(),
                                samtk::DifferencingMode::Eq3Literal, cfg)
      .levels;
}

void BM_Residuals(benchmark::State& state) {
  const std::vector<double> x = demo_series(static_cast<std::size_t>(state.range(0)));
  const samtk::SamParams p = demo_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        samtk::residuals(x, p, samtk::DifferencingMode::Eq3Literal));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Residuals)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_CssObjective(benchmark::State& state) {
  const std::vector<double> x = demo_series(static_cast<std::size_t>(state.range(0)));
  const samtk::SamParams p = demo_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        samtk::css_objective(x, p, samtk::DifferencingMode::Eq3Literal));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CssObjective)->Arg(1000)->Arg(10000);

void BM_Generate(benchmark::State& state) {
  samtk::GenerationConfig cfg;
  cfg.length = state.range(0);
  cfg.seed = 11;
  cfg.init_level = 5000.0;
  cfg.clamp_floor = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(samtk::generate(
        demo_params(), samtk::DifferencingMode::Eq3Literal, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_FitSam(benchmark::State& state) {
  const std::vector<double> x = demo_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        samtk::fit_sam_series(x, 12, samtk::DifferencingMode::Eq3Literal));
  }
}
BENCHMARK(BM_FitSam)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Forecast(benchmark::State& state) {
  const std::vector<double> x = demo_series(4000);
  samtk::FittedModel model;
  model.params = demo_params();
  model.mode = samtk::DifferencingMode::Eq3Literal;
  for (auto _ : state) {
    benchmark::DoNotOptimize(samtk::forecast_series(model, x, 12));
  }
}
BENCHMARK(BM_Forecast);

}  // namespace

BENCHMARK_MAIN();
