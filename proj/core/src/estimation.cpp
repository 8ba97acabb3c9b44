#include "samtk/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "samtk/stats.hpp"

namespace samtk {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("estimation: " + what);
}

// tanh saturates to exactly +-1.0 in double arithmetic around |u| ~ 19;
// keep the mapped coefficient strictly inside the box so validate() holds.
constexpr double kCoefBound = 1.0 - 1e-10;

}  // namespace

double squash(double unconstrained) {
  return std::clamp(std::tanh(unconstrained), -kCoefBound, kCoefBound);
}

double unsquash(double coefficient) {
  if (!(coefficient > -1.0 && coefficient < 1.0))
    fail("cannot unsquash a coefficient outside (-1, 1)");
  return std::atanh(coefficient);
}

FittedModel fit_sam_series(std::span<const double> series, int season,
                           DifferencingMode mode, const FitOptions& options,
                           std::string source) {
  if (season < 2) fail("season must be at least 2");
  if (series.size() < static_cast<std::size_t>(4 * season + 8))
    fail("need at least 4s+8 frames to fit, got " +
         std::to_string(series.size()));

  auto objective = [&](std::span<const double> u) {
    SamParams p;
    p.ar = squash(u[0]);
    p.ma = squash(u[1]);
    p.sar = squash(u[2]);
    p.sma = squash(u[3]);
    p.season = season;
    const double css = css_objective(series, p, mode);
    if (!std::isfinite(css))
      throw std::runtime_error("estimation: objective diverged at phi=" +
                               std::to_string(p.ar) + " theta=" +
                               std::to_string(p.ma) + " Phi_s=" +
                               std::to_string(p.sar) + " Theta_s=" +
                               std::to_string(p.sma));
    return css;
  };

  const std::vector<double> start(4, 0.0);
  const SimplexResult best = nelder_mead(objective, start, options.simplex);

  FittedModel model;
  model.mode = mode;
  model.source = std::move(source);
  model.params.ar = squash(best.point[0]);
  model.params.ma = squash(best.point[1]);
  model.params.sar = squash(best.point[2]);
  model.params.sma = squash(best.point[3]);
  model.params.season = season;
  model.objective_value = best.value;
  model.n_effective = series.size() - warmup_length(season);
  model.params.sigma =
      std::sqrt(best.value / static_cast<double>(model.n_effective));
  model.converged = best.converged;
  model.iterations = best.iterations;
  return model;
}

FittedModel fit_sam(const FrameTrace& trace, int season, DifferencingMode mode,
                    const FitOptions& options) {
  return fit_sam_series(trace.sizes(), season, mode, options, trace.source);
}

ArModel fit_ar_series(std::span<const double> series, int order) {
  if (order < 1) fail("AR order must be at least 1");
  const std::size_t n = series.size();
  if (n < static_cast<std::size_t>(10 * order))
    fail("need at least 10*order frames for the AR fit, got " +
         std::to_string(n));

  const double mean =
      std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);

  // Biased (1/n) autocovariances of the centered series.
  std::vector<double> gamma(static_cast<std::size_t>(order) + 1, 0.0);
  for (std::size_t lag = 0; lag < gamma.size(); ++lag) {
    double acc = 0.0;
    for (std::size_t t = lag; t < n; ++t)
      acc += (series[t] - mean) * (series[t - lag] - mean);
    gamma[lag] = acc / static_cast<double>(n);
  }
  if (gamma[0] <= 0.0) fail("AR fit is undefined for a zero-variance series");

  // Levinson-Durbin. The reflection coefficients double as the
  // stationarity certificate: all inside the unit disc <=> stable.
  std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
  std::vector<double> prev(a.size(), 0.0);
  double err = gamma[0];
  bool stationary = true;
  for (int m = 1; m <= order; ++m) {
    double acc = gamma[static_cast<std::size_t>(m)];
    for (int i = 1; i < m; ++i)
      acc -= a[static_cast<std::size_t>(i)] * gamma[static_cast<std::size_t>(m - i)];
    const double k = acc / err;
    if (!std::isfinite(k)) fail("Yule-Walker system is numerically singular");
    if (std::fabs(k) >= 1.0) stationary = false;

    prev = a;
    a[static_cast<std::size_t>(m)] = k;
    for (int i = 1; i < m; ++i)
      a[static_cast<std::size_t>(i)] =
          prev[static_cast<std::size_t>(i)] - k * prev[static_cast<std::size_t>(m - i)];
    err *= (1.0 - k * k);
    if (!(err > 0.0)) fail("Yule-Walker system is numerically singular");
  }

  ArModel model;
  model.order = order;
  model.coefficients.assign(a.begin() + 1, a.end());
  model.sigma = std::sqrt(err);
  model.stationary = stationary;
  const double coef_sum = std::accumulate(model.coefficients.begin(),
                                          model.coefficients.end(), 0.0);
  model.intercept = mean * (1.0 - coef_sum);
  return model;
}

ArModel fit_ar(const FrameTrace& trace, int order) {
  return fit_ar_series(trace.sizes(), order);
}

double ar_one_step(const ArModel& model, std::span<const double> history) {
  // Process mean, used to left-pad short histories.
  const double coef_sum = std::accumulate(model.coefficients.begin(),
                                          model.coefficients.end(), 0.0);
  const double process_mean =
      std::fabs(1.0 - coef_sum) > 1e-12 ? model.intercept / (1.0 - coef_sum) : 0.0;

  double value = model.intercept;
  for (int i = 1; i <= model.order; ++i) {
    const double x =
        history.size() >= static_cast<std::size_t>(i)
            ? history[history.size() - static_cast<std::size_t>(i)]
            : process_mean;
    value += model.coefficients[static_cast<std::size_t>(i - 1)] * x;
  }
  return value;
}

DiagnosticReport diagnostics_series(const FittedModel& model,
                                    std::span<const double> series) {
  const int s = model.params.season;
  const std::size_t warmup = warmup_length(s);
  const int acf_lags = 3 * s;

  if (series.size() <= warmup)
    fail("series too short for diagnostics: need more than " +
         std::to_string(warmup) + " values");

  const InnovationSeries eps = residuals(series, model.params, model.mode);
  std::vector<double> post(eps.begin() + static_cast<std::ptrdiff_t>(warmup),
                           eps.end());
  if (post.size() <= static_cast<std::size_t>(acf_lags))
    fail("need more than 3s post-warm-up residuals for the residual ACF");

  DiagnosticReport report;
  report.n_residuals = post.size();
  report.residual_acf = acf(post, acf_lags);

  const double n = static_cast<double>(post.size());
  report.residual_mean =
      std::accumulate(post.begin(), post.end(), 0.0) / n;
  double ss = 0.0;
  for (double e : post) {
    const double d = e - report.residual_mean;
    ss += d * d;
  }
  report.residual_variance = post.size() > 1 ? ss / (n - 1.0) : 0.0;

  // Ljung-Box at 2s lags; four coefficients were estimated.
  report.ljung_box_lags = 2 * s;
  report.ljung_box_df = 2 * s - 4;
  double q = 0.0;
  for (int k = 1; k <= report.ljung_box_lags; ++k) {
    const double rho = report.residual_acf[static_cast<std::size_t>(k)];
    q += rho * rho / (n - static_cast<double>(k));
  }
  report.ljung_box = n * (n + 2.0) * q;
  return report;
}

DiagnosticReport diagnostics(const FittedModel& model, const FrameTrace& trace) {
  return diagnostics_series(model, trace.sizes());
}

}  // namespace samtk
