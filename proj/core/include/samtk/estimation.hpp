#pragma once

#include <span>
#include <string>
#include <vector>

#include "samtk/optimize.hpp"
#include "samtk/sam.hpp"
#include "samtk/trace.hpp"

namespace samtk {

struct FitOptions {
  /// The coefficient search always starts from the all-zero point in the
  /// unconstrained (atanh) space; only the budget/tolerances are tunable.
  SimplexOptions simplex;
};

struct FittedModel {
  SamParams params;  // params.sigma = sqrt(CSS / n_effective)
  DifferencingMode mode = DifferencingMode::Eq3Literal;
  double objective_value = 0.0;  // final conditional sum of squares
  std::size_t n_effective = 0;   // residual count entering the objective
  bool converged = false;
  int iterations = 0;
  std::string source;  // provenance of the fitted trace
};

/// Map between the unconstrained search space and the (-1, 1) coefficient
/// box. squash is tanh (clamped a hair inside the box so validate() always
/// passes); unsquash is atanh.
double squash(double unconstrained);
double unsquash(double coefficient);

/// Fit the four SAM coefficients by conditional sum of squares: Nelder-Mead
/// over the squashed coefficient vector, sigma profiled out afterwards.
/// Deterministic. Requires season >= 2 and at least 4s+8 frames.
FittedModel fit_sam(const FrameTrace& trace, int season, DifferencingMode mode,
                    const FitOptions& options = {});
FittedModel fit_sam_series(std::span<const double> series, int season,
                           DifferencingMode mode, const FitOptions& options = {},
                           std::string source = {});

/// AR(p) baseline fitted by Yule-Walker (Levinson-Durbin on biased
/// autocovariances) with an intercept c = mean * (1 - sum a_i).
struct ArModel {
  int order = 1;
  std::vector<double> coefficients;  // a_1 .. a_p
  double intercept = 0.0;
  double sigma = 0.0;       // innovation std dev from the final prediction error
  bool stationary = true;   // all reflection coefficients inside the unit disc
};

/// Requires 1 <= order and trace length >= 10 * order; throws on a
/// zero-variance series and on a numerically singular system.
ArModel fit_ar(const FrameTrace& trace, int order);
ArModel fit_ar_series(std::span<const double> series, int order);

/// One-step-ahead prediction from trailing history (history.back() is the
/// newest value); history shorter than the order is left-padded with the
/// process mean.
double ar_one_step(const ArModel& model, std::span<const double> history);

struct DiagnosticReport {
  std::vector<double> residual_acf;  // lags 0..3s of the post-warm-up residuals
  double ljung_box = 0.0;            // Q at 2s lags
  int ljung_box_lags = 0;            // 2s
  int ljung_box_df = 0;              // 2s - 4 (four estimated coefficients)
  double residual_mean = 0.0;
  double residual_variance = 0.0;    // sample variance
  std::size_t n_residuals = 0;       // post-warm-up count
};

/// Whiteness diagnostics of the model's residuals on a series. Requires
/// enough post-warm-up residuals for a 3s-lag ACF.
DiagnosticReport diagnostics(const FittedModel& model, const FrameTrace& trace);
DiagnosticReport diagnostics_series(const FittedModel& model,
                                    std::span<const double> series);

}  // namespace samtk
