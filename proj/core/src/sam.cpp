#include "samtk/sam.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace samtk {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("sam_core: " + what);
}

void check_coefficient(double v, const char* name) {
  if (!std::isfinite(v) || v <= -1.0 || v >= 1.0)
    fail(std::string(name) + " must lie in (-1, 1)");
}

// The deterministic part of X_t (everything except e_t), given the lagged
// values and innovations it references. Shared by one_step, residuals and
// every forward recursion so all of them agree to the last bit.
struct Lags {
  double x1 = 0, x2 = 0, xs = 0, xs1 = 0, xs2 = 0;  // X_{t-1} .. X_{t-s-2}
  double x2s = 0, x2s1 = 0;                          // X_{t-2s}, X_{t-2s-1}
  double e1 = 0, es = 0, es1 = 0;                    // e_{t-1}, e_{t-s}, e_{t-s-1}
};

double deterministic_part(const Lags& v, const SamParams& p,
                          DifferencingMode mode) {
  if (mode == DifferencingMode::Eq3Literal) {
    return v.x1 + p.ar * v.x1 - p.ar * v.x2 + p.sar * v.xs -
           p.ar * p.sar * v.xs1 - p.sar * v.xs1 + p.ar * p.sar * v.xs2 -
           p.ma * v.e1 - p.sma * v.es + p.ma * p.sma * v.es1;
  }
  return p.ar * v.x1 + (1.0 + p.sar) * v.xs - p.ar * (1.0 + p.sar) * v.xs1 -
         p.sar * v.x2s + p.ar * p.sar * v.x2s1 - p.ma * v.e1 - p.sma * v.es +
         p.ma * p.sma * v.es1;
}

// Lags of X_t where series[t] exists for all indices < t (rolling use).
Lags lags_at(std::span<const double> series, std::span<const double> eps,
             std::size_t t, int season, DifferencingMode mode) {
  const std::size_t s = static_cast<std::size_t>(season);
  Lags v;
  v.x1 = series[t - 1];
  v.x2 = series[t - 2];
  v.xs = series[t - s];
  v.xs1 = series[t - s - 1];
  if (mode == DifferencingMode::Eq3Literal) {
    v.xs2 = series[t - s - 2];
  } else {
    v.x2s = series[t - 2 * s];
    v.x2s1 = series[t - 2 * s - 1];
  }
  v.e1 = eps[t - 1];
  v.es = eps[t - s];
  v.es1 = eps[t - s - 1];
  return v;
}

}  // namespace

void SamParams::validate() const {
  check_coefficient(ar, "phi");
  check_coefficient(ma, "theta");
  check_coefficient(sar, "Phi_s");
  check_coefficient(sma, "Theta_s");
  if (season < 2) fail("season must be at least 2");
  if (!std::isfinite(sigma) || sigma < 0.0) fail("sigma must be >= 0");
}

std::size_t required_history(int season, DifferencingMode mode) {
  if (season < 2) fail("season must be at least 2");
  const std::size_t s = static_cast<std::size_t>(season);
  return mode == DifferencingMode::Eq3Literal ? s + 2 : 2 * s + 1;
}

std::size_t required_innovations(int season) {
  if (season < 2) fail("season must be at least 2");
  return static_cast<std::size_t>(season) + 1;
}

std::size_t first_recursion_index(int season, DifferencingMode mode) {
  return required_history(season, mode);
}

std::size_t warmup_length(int season) {
  if (season < 2) fail("season must be at least 2");
  return 2 * static_cast<std::size_t>(season) + 2;
}

double one_step(std::span<const double> history,
                std::span<const double> innovations, double innovation,
                const SamParams& params, DifferencingMode mode) {
  params.validate();
  const std::size_t need_x = required_history(params.season, mode);
  const std::size_t need_e = required_innovations(params.season);
  if (history.size() < need_x)
    fail("one_step needs " + std::to_string(need_x) + " history values, got " +
         std::to_string(history.size()));
  if (innovations.size() < need_e)
    fail("one_step needs " + std::to_string(need_e) + " innovations, got " +
         std::to_string(innovations.size()));

  // history.back() is X_{t-1}: treat index history.size() as "t".
  const Lags v = lags_at(history, innovations, history.size(), params.season,
                         mode);
  return deterministic_part(v, params, mode) + innovation;
}

InnovationSeries residuals(std::span<const double> series,
                           const SamParams& params, DifferencingMode mode) {
  params.validate();
  const std::size_t first = first_recursion_index(params.season, mode);
  if (series.size() <= first)
    fail("series too short: need more than " + std::to_string(first) +
         " values, got " + std::to_string(series.size()));

  InnovationSeries eps(series.size(), 0.0);
  for (std::size_t t = first; t < series.size(); ++t) {
    const Lags v = lags_at(series, eps, t, params.season, mode);
    eps[t] = series[t] - deterministic_part(v, params, mode);
  }
  return eps;
}

double css_objective(std::span<const double> series, const SamParams& params,
                     DifferencingMode mode) {
  params.validate();
  const std::size_t warmup = warmup_length(params.season);
  if (series.size() <= warmup)
    fail("series too short for the objective: need more than " +
         std::to_string(warmup) + " values, got " +
         std::to_string(series.size()));

  const InnovationSeries eps = residuals(series, params, mode);
  double css = 0.0;
  for (std::size_t t = warmup; t < eps.size(); ++t) css += eps[t] * eps[t];
  return css;
}

double gaussian_loglik(std::span<const double> series, const SamParams& params,
                       DifferencingMode mode) {
  if (!(params.sigma > 0.0)) fail("log-likelihood requires sigma > 0");
  const double css = css_objective(series, params, mode);
  const double n_eff =
      static_cast<double>(series.size() - warmup_length(params.season));
  const double var = params.sigma * params.sigma;
  return -0.5 * n_eff * std::log(2.0 * std::numbers::pi * var) -
         css / (2.0 * var);
}

}  // namespace samtk
