#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace samtk {

/// Which differencing structure the recursion carries.
///
/// Eq3Literal is the authoritative form: the expansion of
///   (1 - phi*B)(1 - B)(1 - Phi_s*B^s) X_t = (1 - theta*B)(1 - Theta_s*B^s) e_t,
/// i.e. the seasonal AR factor multiplies the *undifferenced* series, so the
/// deepest value lag is s+2.
///
/// StandardSeasonal replaces the plain difference with a seasonal one,
///   (1 - phi*B)(1 - Phi_s*B^s)(1 - B^s) X_t = (1 - theta*B)(1 - Theta_s*B^s) e_t,
/// the textbook (1,0,1)x(1,1,1)_s layout; deepest value lag 2s+1.
enum class DifferencingMode { Eq3Literal, StandardSeasonal };

/// Coefficients of the seasonal ARIMA(1,0,1)x(1,1,1)_s model ("SAM").
/// JSON names them phi/theta/Phi_s/Theta_s/s/sigma.
struct SamParams {
  double ar = 0.0;    // phi, non-seasonal AR(1)
  double ma = 0.0;    // theta, non-seasonal MA(1)
  double sar = 0.0;   // Phi_s, seasonal AR(1)
  double sma = 0.0;   // Theta_s, seasonal MA(1)
  int season = 2;     // s, the seasonal period (GoP length), >= 2
  double sigma = 0.0; // innovation standard deviation, >= 0

  /// Throws std::invalid_argument unless all four coefficients are in
  /// (-1, 1), season >= 2, sigma >= 0, and everything is finite.
  void validate() const;
};

/// Innovation series aligned index-for-index with a value series; warm-up
/// entries (indices the recursion cannot reach) are zero.
using InnovationSeries = std::vector<double>;

/// Number of trailing values one_step() must see: s+2 for Eq3Literal,
/// 2s+1 for StandardSeasonal.
std::size_t required_history(int season, DifferencingMode mode);

/// Number of trailing innovations one_step() must see (both modes: s+1).
std::size_t required_innovations(int season);

/// First series index at which the recursion is computable; equal to
/// required_history().
std::size_t first_recursion_index(int season, DifferencingMode mode);

/// Number of leading indices css_objective()/gaussian_loglik() exclude in
/// both modes: 2s+2. A common cutoff keeps objectives comparable across
/// differencing modes.
std::size_t warmup_length(int season);

/// One step of the SAM recursion: the next value implied by trailing history
/// X_{t-1},... (history.back() is X_{t-1}), trailing innovations e_{t-1},...
/// (innovations.back() is e_{t-1}), and the current innovation e_t.
///
/// Eq3Literal:
///   X_t = X_{t-1} + phi X_{t-1} - phi X_{t-2}
///       + Phi_s X_{t-s} - phi Phi_s X_{t-s-1} - Phi_s X_{t-s-1}
///       + phi Phi_s X_{t-s-2}
///       - theta e_{t-1} - Theta_s e_{t-s} + theta Theta_s e_{t-s-1} + e_t
///
/// StandardSeasonal:
///   X_t = phi X_{t-1} + (1 + Phi_s) X_{t-s} - phi (1 + Phi_s) X_{t-s-1}
///       - Phi_s X_{t-2s} + phi Phi_s X_{t-2s-1}
///       - theta e_{t-1} - Theta_s e_{t-s} + theta Theta_s e_{t-s-1} + e_t
double one_step(std::span<const double> history,
                std::span<const double> innovations, double innovation,
                const SamParams& params, DifferencingMode mode);

/// Invert the recursion: the innovation sequence that reproduces `series`
/// under `params`, with e_t = 0 for every warm-up index t <
/// first_recursion_index(). Requires series.size() > first_recursion_index().
InnovationSeries residuals(std::span<const double> series,
                           const SamParams& params, DifferencingMode mode);

/// Conditional sum of squared residuals over t in [2s+2, n). Requires
/// n > 2s+2 (at least one effective index); invariant under adding a
/// constant to the series (the differencing factor removes levels).
double css_objective(std::span<const double> series, const SamParams& params,
                     DifferencingMode mode);

/// Gaussian log-likelihood implied by the CSS residuals and params.sigma:
///   -(n_eff/2) ln(2 pi sigma^2) - CSS / (2 sigma^2),
/// n_eff = n - (2s+2). Requires sigma > 0.
double gaussian_loglik(std::span<const double> series, const SamParams& params,
                       DifferencingMode mode);

}  // namespace samtk
