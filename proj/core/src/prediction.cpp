#include "samtk/prediction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace samtk {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("prediction: " + what);
}

constexpr std::size_t kMinOrigins = 50;

}  // namespace

Forecast forecast_series(const FittedModel& model,
                         std::span<const double> history, int horizon) {
  if (horizon < 1) fail("horizon must be at least 1");
  const std::size_t warmup = warmup_length(model.params.season);
  if (history.size() < warmup)
    fail("history shorter than the residual warm-up (" +
         std::to_string(warmup) + " frames)");

  // Residuals over the observed range, then run the recursion forward with
  // future innovations at their conditional mean, zero.
  InnovationSeries eps = residuals(history, model.params, model.mode);
  std::vector<double> values(history.begin(), history.end());
  values.reserve(history.size() + static_cast<std::size_t>(horizon));
  eps.reserve(values.capacity());

  Forecast out;
  out.origin = history.size() - 1;
  out.horizon = horizon;
  out.point_values.reserve(static_cast<std::size_t>(horizon));
  for (int k = 0; k < horizon; ++k) {
    const double v = one_step(values, eps, 0.0, model.params, model.mode);
    values.push_back(v);
    eps.push_back(0.0);
    out.point_values.push_back(v);
  }
  return out;
}

Forecast forecast(const FittedModel& model, const FrameTrace& history,
                  int horizon) {
  return forecast_series(model, history.sizes(), horizon);
}

PredictionReport evaluate_predictors_series(std::span<const double> series,
                                            int season, int horizon,
                                            double split, DifferencingMode mode,
                                            const EvaluationOptions& options) {
  if (horizon < 1) fail("horizon must be at least 1");
  if (!(split > 0.0 && split < 1.0)) fail("split must lie in (0, 1)");
  if (options.ar_order < 1) fail("AR order must be at least 1");
  if (options.refit_every < 0) fail("refit_every must be >= 0");

  const std::size_t n = series.size();
  const std::size_t n_fit =
      static_cast<std::size_t>(static_cast<double>(n) * split);
  if (n_fit == 0 || n_fit + static_cast<std::size_t>(horizon) > n)
    fail("split leaves no room for evaluation");
  const std::size_t n_origins = n - static_cast<std::size_t>(horizon) - n_fit + 1;
  if (n_origins < kMinOrigins)
    fail("too few evaluation origins (" + std::to_string(n_origins) +
         "), need at least " + std::to_string(kMinOrigins));

  FittedModel sam = fit_sam_series(series.first(n_fit), season, mode, options.fit);
  ArModel ar = fit_ar_series(series.first(n_fit), options.ar_order);
  // Residuals over the whole series: the residual at t only reads values
  // before t, so one pass serves every forecast origin.
  InnovationSeries eps = residuals(series, sam.params, mode);

  // Rolling windows reused across origins.
  const std::size_t window = warmup_length(season);  // covers the deepest lag
  std::vector<double> xs, es, ar_xs;

  PredictionReport report;
  report.horizon = horizon;
  report.ar_order = options.ar_order;
  report.origins = n_origins;
  report.fit_length = n_fit;
  report.sam_rmse_by_step.assign(static_cast<std::size_t>(horizon), 0.0);
  report.ar_rmse_by_step.assign(static_cast<std::size_t>(horizon), 0.0);

  double sam_abs = 0, sam_sq = 0, sam_re = 0;
  double ar_abs = 0, ar_sq = 0, ar_re = 0;
  std::size_t count = 0, re_count = 0;

  for (std::size_t origin = n_fit; origin + static_cast<std::size_t>(horizon) <= n;
       ++origin) {
    if (options.refit_every > 0 && origin > n_fit &&
        (origin - n_fit) % static_cast<std::size_t>(options.refit_every) == 0) {
      sam = fit_sam_series(series.first(origin), season, mode, options.fit);
      ar = fit_ar_series(series.first(origin), options.ar_order);
      eps = residuals(series, sam.params, mode);
    }

    xs.assign(series.begin() + static_cast<std::ptrdiff_t>(origin - window),
              series.begin() + static_cast<std::ptrdiff_t>(origin));
    es.assign(eps.begin() + static_cast<std::ptrdiff_t>(origin - window),
              eps.begin() + static_cast<std::ptrdiff_t>(origin));
    ar_xs.assign(
        series.begin() + static_cast<std::ptrdiff_t>(
                             origin - std::min<std::size_t>(
                                          origin, static_cast<std::size_t>(
                                                      options.ar_order))),
        series.begin() + static_cast<std::ptrdiff_t>(origin));

    for (int k = 0; k < horizon; ++k) {
      const double sam_hat = one_step(xs, es, 0.0, sam.params, mode);
      xs.push_back(sam_hat);
      es.push_back(0.0);
      const double ar_hat = ar_one_step(ar, ar_xs);
      ar_xs.push_back(ar_hat);

      const double actual = series[origin + static_cast<std::size_t>(k)];
      const double se = sam_hat - actual;
      const double ae = ar_hat - actual;
      sam_abs += std::fabs(se);
      sam_sq += se * se;
      ar_abs += std::fabs(ae);
      ar_sq += ae * ae;
      if (actual != 0.0) {
        sam_re += std::fabs(se / actual);
        ar_re += std::fabs(ae / actual);
        ++re_count;
      }
      report.sam_rmse_by_step[static_cast<std::size_t>(k)] += se * se;
      report.ar_rmse_by_step[static_cast<std::size_t>(k)] += ae * ae;
      ++count;
    }
  }

  const double nc = static_cast<double>(count);
  report.sam.mae = sam_abs / nc;
  report.sam.rmse = std::sqrt(sam_sq / nc);
  report.ar.mae = ar_abs / nc;
  report.ar.rmse = std::sqrt(ar_sq / nc);
  if (re_count > 0) {
    report.sam.mre = sam_re / static_cast<double>(re_count);
    report.ar.mre = ar_re / static_cast<double>(re_count);
  }
  for (int k = 0; k < horizon; ++k) {
    const auto i = static_cast<std::size_t>(k);
    report.sam_rmse_by_step[i] =
        std::sqrt(report.sam_rmse_by_step[i] / static_cast<double>(n_origins));
    report.ar_rmse_by_step[i] =
        std::sqrt(report.ar_rmse_by_step[i] / static_cast<double>(n_origins));
  }
  report.improvement_ratio =
      report.ar.rmse > 0.0 ? 1.0 - report.sam.rmse / report.ar.rmse : 0.0;
  return report;
}

PredictionReport evaluate_predictors(const FrameTrace& trace, int season,
                                     int horizon, double split,
                                     DifferencingMode mode,
                                     const EvaluationOptions& options) {
  return evaluate_predictors_series(trace.sizes(), season, horizon, split, mode,
                                    options);
}

}  // namespace samtk
