#pragma once

#include <functional>
#include <span>
#include <vector>

namespace samtk {

struct SimplexOptions {
  int max_evaluations = 2000;
  /// Converged when max-min objective over the simplex drops below
  /// max(spread_tolerance, relative_spread * |best|).
  double spread_tolerance = 1e-10;
  double relative_spread = 1e-12;
  double initial_step = 0.25;  // offset of the n axis vertices from start
};

struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  int evaluations = 0;
  int iterations = 0;
  bool converged = false;  // false means the evaluation budget ran out
};

/// Deterministic Nelder-Mead over R^n with the standard coefficients
/// (reflect 1, expand 2, contract 1/2, shrink 1/2) and a fixed initial
/// simplex {start, start + step*e_i}. No restarts, no randomness; identical
/// inputs walk an identical vertex sequence.
SimplexResult nelder_mead(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, const SimplexOptions& options = {});

}  // namespace samtk
