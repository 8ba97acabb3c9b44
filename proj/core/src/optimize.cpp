#include "samtk/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace samtk {

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

}  // namespace

SimplexResult nelder_mead(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, const SimplexOptions& options) {
  const std::size_t n = start.size();
  if (n == 0)
    throw std::invalid_argument("optimize: cannot optimize over zero dimensions");
  if (options.max_evaluations < static_cast<int>(n) + 1)
    throw std::invalid_argument(
        "optimize: evaluation budget smaller than the initial simplex");

  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return objective(std::span<const double>(x));
  };
  auto budget_left = [&] { return evals < options.max_evaluations; };

  // Fixed initial simplex: the start point plus one axis step per dimension.
  std::vector<Vertex> simplex(n + 1);
  simplex[0].x.assign(start.begin(), start.end());
  simplex[0].f = eval(simplex[0].x);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1].x = simplex[0].x;
    simplex[i + 1].x[i] += options.initial_step;
    simplex[i + 1].f = eval(simplex[i + 1].x);
  }

  // Stable sort keeps the walk deterministic when objectives tie.
  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  order();

  SimplexResult result;
  std::vector<double> centroid(n), trial(n);
  // trial = centroid + coef * (centroid - worst)
  auto blend = [&](double coef, const std::vector<double>& worst) {
    for (std::size_t i = 0; i < n; ++i)
      trial[i] = centroid[i] + coef * (centroid[i] - worst[i]);
  };
  auto shrink = [&] {
    for (std::size_t v = 1; v <= n && budget_left(); ++v) {
      for (std::size_t i = 0; i < n; ++i)
        simplex[v].x[i] =
            simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
      simplex[v].f = eval(simplex[v].x);
    }
  };

  while (budget_left()) {
    const double spread = simplex.back().f - simplex.front().f;
    const double limit =
        std::max(options.spread_tolerance,
                 options.relative_spread * std::fabs(simplex.front().f));
    if (spread <= limit) {
      result.converged = true;
      break;
    }
    ++result.iterations;

    // Centroid of all but the worst vertex.
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i];
    for (std::size_t i = 0; i < n; ++i) centroid[i] /= static_cast<double>(n);

    Vertex& worst = simplex.back();
    blend(1.0, worst.x);
    const double fr = eval(trial);

    if (fr < simplex.front().f) {
      // Reflection beat the best vertex: try to expand past it.
      std::vector<double> reflected = trial;
      blend(2.0, worst.x);
      const double fe = budget_left() ? eval(trial) : fr;
      if (fe < fr) {
        worst.x = trial;
        worst.f = fe;
      } else {
        worst.x = std::move(reflected);
        worst.f = fr;
      }
    } else if (fr < simplex[n - 1].f) {
      worst.x = trial;
      worst.f = fr;
    } else if (fr < worst.f) {
      // Outside contraction, halfway toward the reflection point.
      blend(0.5, worst.x);
      const double fc = budget_left() ? eval(trial) : fr;
      if (fc <= fr) {
        worst.x = trial;
        worst.f = fc;
      } else {
        shrink();
      }
    } else {
      // Inside contraction, halfway back from the worst vertex.
      blend(-0.5, worst.x);
      const double fc = budget_left() ? eval(trial) : worst.f;
      if (fc < worst.f) {
        worst.x = trial;
        worst.f = fc;
      } else {
        shrink();
      }
    }
    order();
  }

  result.point = simplex.front().x;
  result.value = simplex.front().f;
  result.evaluations = evals;
  return result;
}

}  // namespace samtk
