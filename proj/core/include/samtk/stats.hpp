#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "samtk/trace.hpp"

namespace samtk {

/// Autocorrelation at lags 0..max_lag with the biased (1/n) covariance
/// estimator; values[0] is always 1. Requires series length > max_lag and a
/// non-constant series.
std::vector<double> acf(std::span<const double> series, int max_lag);

/// Right-continuous empirical CDF of a sample.
class Ecdf {
 public:
  explicit Ecdf(std::span<const double> sample);  // requires non-empty
  double operator()(double x) const;  // fraction of sample <= x
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

/// Two-sample Kolmogorov-Smirnov statistic, sup |F_a - F_b|.
double ks_statistic(std::span<const double> a, std::span<const double> b);

/// Distribution/correlation distance between a reference trace and a
/// synthetic one.
struct ComparisonReport {
  int acf_lags = 0;           // 3 * season
  double acf_distance = 0.0;  // mean |acf_a(k) - acf_b(k)| over lags 1..3s
  double ks = 0.0;
  double mean_a = 0.0, mean_b = 0.0;
  double mean_delta = 0.0;          // b - a
  double mean_relative_delta = 0.0; // delta / |a|, 0 when a == 0
  double std_a = 0.0, std_b = 0.0;
  double std_delta = 0.0;
  double std_relative_delta = 0.0;
};

/// Requires both traces longer than 3*season and non-constant.
ComparisonReport compare_traces(const FrameTrace& reference,
                                const FrameTrace& candidate, int season);

/// A named point in feature space. The canonical layout produced by
/// make_feature_vector has the 10 features of feature_names():
/// mean, std, min, max, skewness, kurtosis, acf at lags 1, round(s/2) and s
/// (s the detected seasonality), and the detected seasonality itself.
struct FeatureVector {
  std::string name;
  std::vector<double> values;
};

const std::vector<std::string>& feature_names();
FeatureVector make_feature_vector(const FrameTrace& trace, int max_period,
                                  std::string name);

/// Column-wise standardization to zero mean / unit variance. Throws on a
/// zero-variance column (reported by name when the canonical layout is
/// recognized). Requires >= 2 rows of equal dimension.
struct Standardization {
  std::vector<double> mean;
  std::vector<double> std_dev;
};
std::vector<std::vector<double>> standardize(
    const std::vector<FeatureVector>& vectors, Standardization* out = nullptr);

/// PCA of the correlation matrix (features are standardized internally).
/// Directions are orthonormal rows in descending eigenvalue order with a
/// deterministic sign (largest-magnitude coordinate positive).
struct PcaResult {
  std::vector<std::vector<double>> directions;  // keep x d
  std::vector<double> explained_ratios;         // descending, sums to 1 at full rank
  std::vector<std::vector<double>> scores;      // n x keep
};
PcaResult pca(const std::vector<FeatureVector>& vectors, int keep);

/// Lloyd k-means on points *as given* (standardize first if features have
/// incomparable scales). Deterministic: farthest-point seeding from a
/// SplitMix64-seeded first pick, ties and empty-cluster repairs resolved by
/// lowest index. Requires 1 <= k <= n.
struct ClusterResult {
  std::vector<std::vector<double>> centroids;  // k x d
  std::vector<int> assignment;                 // n, values in [0, k)
  double wcss = 0.0;
  int iterations = 0;
  std::vector<double> wcss_history;  // per iteration, non-increasing
};
ClusterResult kmeans(const std::vector<std::vector<double>>& points, int k,
                     std::uint64_t seed, int max_iterations = 100);

}  // namespace samtk
