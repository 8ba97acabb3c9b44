#include "samtk/stats.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "samtk/rng.hpp"

namespace samtk {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("stats_analysis: " + what);
}

double sq_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

std::string column_label(std::size_t column, std::size_t dimension) {
  if (dimension == feature_names().size()) return feature_names()[column];
  return "column " + std::to_string(column);
}

}  // namespace

std::vector<double> acf(std::span<const double> series, int max_lag) {
  if (max_lag < 0) fail("ACF lag must be non-negative");
  const std::size_t n = series.size();
  if (n <= static_cast<std::size_t>(max_lag))
    fail("series must be longer than the deepest ACF lag");

  const double mean =
      std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);
  double denom = 0.0;
  for (double x : series) denom += (x - mean) * (x - mean);
  if (denom == 0.0) fail("ACF is undefined for a constant series");

  std::vector<double> rho(static_cast<std::size_t>(max_lag) + 1, 0.0);
  rho[0] = 1.0;
  for (int lag = 1; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (std::size_t t = static_cast<std::size_t>(lag); t < n; ++t)
      acc += (series[t] - mean) * (series[t - static_cast<std::size_t>(lag)] - mean);
    rho[static_cast<std::size_t>(lag)] = acc / denom;
  }
  return rho;
}

Ecdf::Ecdf(std::span<const double> sample)
    : sorted_(sample.begin(), sample.end()) {
  if (sorted_.empty()) fail("ECDF of an empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) fail("KS statistic of an empty sample");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  // Walk both sorted samples, evaluating the step gap at every jump point.
  double best = 0.0;
  std::size_t i = 0, j = 0;
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    best = std::max(best, std::fabs(static_cast<double>(i) / na -
                                    static_cast<double>(j) / nb));
  }
  return best;
}

ComparisonReport compare_traces(const FrameTrace& reference,
                                const FrameTrace& candidate, int season) {
  if (season < 2) fail("season must be at least 2");
  const int lags = 3 * season;
  const std::vector<double> xa = reference.sizes();
  const std::vector<double> xb = candidate.sizes();
  if (xa.size() <= static_cast<std::size_t>(lags) ||
      xb.size() <= static_cast<std::size_t>(lags))
    fail("both traces must be longer than 3*season for the ACF distance");

  const std::vector<double> ra = acf(xa, lags);
  const std::vector<double> rb = acf(xb, lags);

  ComparisonReport report;
  report.acf_lags = lags;
  double acc = 0.0;
  for (int k = 1; k <= lags; ++k)
    acc += std::fabs(ra[static_cast<std::size_t>(k)] -
                     rb[static_cast<std::size_t>(k)]);
  report.acf_distance = acc / static_cast<double>(lags);
  report.ks = ks_statistic(xa, xb);

  const MomentStats ma = summarize(reference).overall;
  const MomentStats mb = summarize(candidate).overall;
  report.mean_a = ma.mean;
  report.mean_b = mb.mean;
  report.mean_delta = mb.mean - ma.mean;
  report.mean_relative_delta =
      ma.mean != 0.0 ? report.mean_delta / std::fabs(ma.mean) : 0.0;
  report.std_a = ma.std_dev;
  report.std_b = mb.std_dev;
  report.std_delta = mb.std_dev - ma.std_dev;
  report.std_relative_delta =
      ma.std_dev != 0.0 ? report.std_delta / ma.std_dev : 0.0;
  return report;
}

const std::vector<std::string>& feature_names() {
  static const std::vector<std::string> names = {
      "mean",  "std",      "min",        "max",    "skewness",
      "kurtosis", "acf_lag1", "acf_half_season", "acf_season", "seasonality"};
  return names;
}

FeatureVector make_feature_vector(const FrameTrace& trace, int max_period,
                                  std::string name) {
  const int season = detect_seasonality(trace, max_period);
  const MomentStats m = summarize(trace).overall;
  const std::vector<double> rho = acf(trace.sizes(), season);
  const int half = std::max(1, static_cast<int>(std::lround(season / 2.0)));

  FeatureVector fv;
  fv.name = std::move(name);
  fv.values = {m.mean,
               m.std_dev,
               m.min,
               m.max,
               m.skewness,
               m.kurtosis,
               rho[1],
               rho[static_cast<std::size_t>(half)],
               rho[static_cast<std::size_t>(season)],
               static_cast<double>(season)};
  return fv;
}

std::vector<std::vector<double>> standardize(
    const std::vector<FeatureVector>& vectors, Standardization* out) {
  if (vectors.size() < 2) fail("standardization needs at least 2 vectors");
  const std::size_t d = vectors.front().values.size();
  for (const FeatureVector& v : vectors)
    if (v.values.size() != d) fail("feature vectors differ in dimension");

  const double n = static_cast<double>(vectors.size());
  Standardization st;
  st.mean.assign(d, 0.0);
  st.std_dev.assign(d, 0.0);
  for (const FeatureVector& v : vectors)
    for (std::size_t c = 0; c < d; ++c) st.mean[c] += v.values[c];
  for (std::size_t c = 0; c < d; ++c) st.mean[c] /= n;
  for (const FeatureVector& v : vectors)
    for (std::size_t c = 0; c < d; ++c) {
      const double dv = v.values[c] - st.mean[c];
      st.std_dev[c] += dv * dv;
    }
  for (std::size_t c = 0; c < d; ++c) {
    st.std_dev[c] = std::sqrt(st.std_dev[c] / (n - 1.0));
    if (st.std_dev[c] == 0.0)
      fail("zero-variance feature '" + column_label(c, d) +
           "', drop it before analysis");
  }

  std::vector<std::vector<double>> rows(vectors.size(),
                                        std::vector<double>(d, 0.0));
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < d; ++c)
      rows[r][c] = (vectors[r].values[c] - st.mean[c]) / st.std_dev[c];
  if (out) *out = std::move(st);
  return rows;
}

PcaResult pca(const std::vector<FeatureVector>& vectors, int keep) {
  const std::vector<std::vector<double>> z = standardize(vectors);
  const std::size_t n = z.size();
  const std::size_t d = z.front().size();
  if (keep < 1 || static_cast<std::size_t>(keep) > d)
    fail("PCA component count must lie in [1, dimension]");

  Eigen::MatrixXd Z(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < d; ++c)
      Z(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z[r][c];

  const Eigen::MatrixXd corr =
      (Z.transpose() * Z) / static_cast<double>(n - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(corr);
  if (solver.info() != Eigen::Success)
    fail("eigendecomposition failed to converge");

  const Eigen::VectorXd evals = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd evecs = solver.eigenvectors();
  const double total = std::max(evals.sum(), std::numeric_limits<double>::min());

  PcaResult result;
  result.directions.reserve(static_cast<std::size_t>(keep));
  result.explained_ratios.reserve(static_cast<std::size_t>(keep));
  for (int k = 0; k < keep; ++k) {
    const Eigen::Index col = static_cast<Eigen::Index>(d) - 1 - k;
    Eigen::VectorXd v = evecs.col(col);
    // Deterministic sign: the largest-magnitude coordinate is positive.
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0.0) v = -v;
    result.directions.emplace_back(v.data(), v.data() + v.size());
    result.explained_ratios.push_back(std::max(evals(col), 0.0) / total);
  }

  result.scores.assign(n, std::vector<double>(static_cast<std::size_t>(keep), 0.0));
  for (std::size_t r = 0; r < n; ++r)
    for (int k = 0; k < keep; ++k) {
      double dot = 0.0;
      for (std::size_t c = 0; c < d; ++c)
        dot += z[r][c] * result.directions[static_cast<std::size_t>(k)][c];
      result.scores[r][static_cast<std::size_t>(k)] = dot;
    }
  return result;
}

ClusterResult kmeans(const std::vector<std::vector<double>>& points, int k,
                     std::uint64_t seed, int max_iterations) {
  if (points.empty()) fail("k-means needs at least one point");
  const std::size_t n = points.size();
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) fail("points differ in dimension");
  if (k < 1 || static_cast<std::size_t>(k) > n)
    fail("k must lie in [1, number of points]");
  if (max_iterations < 1) fail("max_iterations must be at least 1");

  // Farthest-point seeding: random first pick, then repeatedly the point
  // farthest from its nearest chosen centre (ties to the lowest index).
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> centroids;
  centroids.reserve(static_cast<std::size_t>(k));
  std::vector<char> chosen(n, 0);
  const std::size_t start = static_cast<std::size_t>(rng.next_u64() % n);
  centroids.push_back(points[start]);
  chosen[start] = 1;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  while (centroids.size() < static_cast<std::size_t>(k)) {
    for (std::size_t i = 0; i < n; ++i)
      nearest[i] = std::min(nearest[i], sq_distance(points[i], centroids.back()));
    std::size_t far = n;
    double far_d = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      if (nearest[i] > far_d) {
        far_d = nearest[i];
        far = i;
      }
    }
    centroids.push_back(points[far]);
    chosen[far] = 1;
  }

  ClusterResult result;
  result.assignment.assign(n, -1);
  std::vector<int> next(n, 0);
  for (int iter = 0; iter < max_iterations; ++iter) {
    // Assignment step: nearest centroid, ties to the lower index.
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = sq_distance(points[i], centroids[0]);
      for (int c = 1; c < k; ++c) {
        const double dist = sq_distance(points[i], centroids[static_cast<std::size_t>(c)]);
        if (dist < best_d) {
          best_d = dist;
          best = c;
        }
      }
      next[i] = best;
    }

    // Update step, with empty clusters reseeded on the farthest point.
    std::vector<std::vector<double>> sums(static_cast<std::size_t>(k),
                                          std::vector<double>(d, 0.0));
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(next[i]);
      ++counts[c];
      for (std::size_t j = 0; j < d; ++j) sums[c][j] += points[i][j];
    }
    for (int c = 0; c < k; ++c) {
      const auto ci = static_cast<std::size_t>(c);
      if (counts[ci] == 0) {
        std::size_t far = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double dist = sq_distance(
              points[i], centroids[static_cast<std::size_t>(next[i])]);
          if (dist > far_d) {
            far_d = dist;
            far = i;
          }
        }
        centroids[ci] = points[far];
        next[far] = c;
      } else {
        for (std::size_t j = 0; j < d; ++j)
          centroids[ci][j] = sums[ci][j] / static_cast<double>(counts[ci]);
      }
    }

    double wcss = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      wcss += sq_distance(points[i],
                          centroids[static_cast<std::size_t>(next[i])]);
    result.wcss_history.push_back(wcss);
    result.iterations = iter + 1;

    if (next == result.assignment) break;  // fixpoint
    result.assignment = next;
  }

  result.centroids = std::move(centroids);
  result.wcss = result.wcss_history.back();
  return result;
}

}  // namespace samtk
