#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "samtk/estimation.hpp"
#include "samtk/sam.hpp"
#include "samtk/trace.hpp"

namespace samtk {

struct Forecast {
  std::size_t origin = 0;  // index of the last observed frame
  int horizon = 0;
  std::vector<double> point_values;  // unclamped point forecasts, size horizon
};

/// h-step-ahead point forecasts: extract residuals over the history, then
/// iterate one_step() with future innovations set to their mean (zero).
/// Requires horizon >= 1 and history length >= 2s+2 (residual warm-up).
Forecast forecast(const FittedModel& model, const FrameTrace& history, int horizon);
Forecast forecast_series(const FittedModel& model, std::span<const double> history,
                         int horizon);

struct ErrorMetrics {
  double mae = 0.0;
  double rmse = 0.0;
  double mre = 0.0;  // mean |error| / |actual|, zero actuals skipped
};

struct PredictionReport {
  ErrorMetrics sam;
  ErrorMetrics ar;
  std::vector<double> sam_rmse_by_step;  // size horizon
  std::vector<double> ar_rmse_by_step;
  double improvement_ratio = 0.0;  // 1 - sam.rmse / ar.rmse (0 if ar.rmse == 0)
  int horizon = 0;
  int ar_order = 1;
  std::size_t origins = 0;     // number of evaluation origins
  std::size_t fit_length = 0;  // frames used for fitting
};

struct EvaluationOptions {
  int ar_order = 1;
  /// Refit both models every this many origins (0 = fit once on the split).
  int refit_every = 0;
  FitOptions fit;
};

/// Rolling-origin comparison of SAM against the AR baseline: fit both on the
/// first `split` fraction, forecast h steps from every origin in
/// [fit_length, n-h], score against the held-out actuals. Requires
/// 0 < split < 1 and at least 50 origins. Origin order does not affect the
/// aggregate metrics.
PredictionReport evaluate_predictors(const FrameTrace& trace, int season,
                                     int horizon, double split,
                                     DifferencingMode mode = DifferencingMode::Eq3Literal,
                                     const EvaluationOptions& options = {});
PredictionReport evaluate_predictors_series(std::span<const double> series,
                                            int season, int horizon, double split,
                                            DifferencingMode mode,
                                            const EvaluationOptions& options = {});

}  // namespace samtk
