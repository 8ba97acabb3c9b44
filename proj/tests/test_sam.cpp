#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "samtk/rng.hpp"
#include "samtk/sam.hpp"
#include "support/oracles.hpp"

using namespace samtk;

namespace {

SamParams make_params(double ar, double ma, double sar, double sma, int season,
                      double sigma = 1.0) {
  SamParams p;
  p.ar = ar;
  p.ma = ma;
  p.sar = sar;
  p.sma = sma;
  p.season = season;
  p.sigma = sigma;
  return p;
}

// Forward-simulate a series with known innovations through one_step itself.
std::vector<double> simulate_series(const SamParams& p, DifferencingMode mode,
                                    const std::vector<double>& eps,
                                    double init) {
  const std::size_t first = first_recursion_index(p.season, mode);
  std::vector<double> x(eps.size());
  for (std::size_t t = 0; t < eps.size(); ++t) {
    if (t < first) {
      x[t] = init;
      continue;
    }
    x[t] = one_step(std::span<const double>(x.data(), t),
                    std::span<const double>(eps.data(), t), eps[t], p, mode);
  }
  return x;
}

std::vector<double> gaussian_vector(std::size_t n, std::uint64_t seed,
                                    double scale) {
  SplitMix64 rng(seed);
  std::vector<double> out(n);
  for (double& v : out) v = scale * rng.next_gaussian();
  return out;
}

}  // namespace

TEST_CASE("lag requirements per mode") {
  CHECK(required_history(12, DifferencingMode::Eq3Literal) == 14);
  CHECK(required_history(12, DifferencingMode::StandardSeasonal) == 25);
  CHECK(required_innovations(12) == 13);
  CHECK(first_recursion_index(2, DifferencingMode::Eq3Literal) == 4);
  CHECK(first_recursion_index(2, DifferencingMode::StandardSeasonal) == 5);
  CHECK(warmup_length(12) == 26);
  CHECK_THROWS_AS(required_history(1, DifferencingMode::Eq3Literal),
                  std::invalid_argument);
}

TEST_CASE("one_step with all coefficients zero is a random walk") {
  const SamParams p = make_params(0.0, 0.0, 0.0, 0.0, 4);
  std::vector<double> x = {1, 2, 3, 4, 5, 7};
  std::vector<double> e(x.size(), 0.0);
  CHECK(one_step(x, e, 0.0, p, DifferencingMode::Eq3Literal) ==
        doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("one_step with only phi set matches the hand expansion") {
  // X_t = X_{t-1} + phi*(X_{t-1} - X_{t-2}) = 4 + 0.5*(4 - 2) = 5
  const SamParams p = make_params(0.5, 0.0, 0.0, 0.0, 3);
  std::vector<double> x = {0, 0, 0, 2, 4};
  std::vector<double> e(x.size(), 0.0);
  CHECK(one_step(x, e, 0.0, p, DifferencingMode::Eq3Literal) ==
        doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("one_step is exactly linear in the current innovation") {
  // Integer histories and dyadic innovations make the addition exact.
  const SamParams p = make_params(0.5, 0.25, -0.5, 0.75, 5);
  SplitMix64 rng(11);
  for (DifferencingMode mode :
       {DifferencingMode::Eq3Literal, DifferencingMode::StandardSeasonal}) {
    std::vector<double> x, e;
    for (int i = 0; i < 16; ++i) {
      x.push_back(static_cast<double>(rng.next_u64() % 4096));
      e.push_back(static_cast<double>(rng.next_u64() % 256) / 256.0);
    }
    const double base = one_step(x, e, 0.0, p, mode);
    for (double a : {0.5, 1.25, -3.0, 100.0}) {
      CHECK(one_step(x, e, a, p, mode) - base == a);
    }
  }
}

TEST_CASE("the two differencing modes genuinely differ when Phi_s != 0") {
  const SamParams p = make_params(0.3, 0.0, 0.5, 0.0, 4);
  std::vector<double> x = {3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5};
  std::vector<double> e(x.size(), 0.0);
  const double a = one_step(x, e, 0.0, p, DifferencingMode::Eq3Literal);
  const double b = one_step(x, e, 0.0, p, DifferencingMode::StandardSeasonal);
  CHECK(a != b);
}

TEST_CASE("one_step rejects short history and bad parameters") {
  const SamParams p = make_params(0.2, 0.1, 0.3, 0.2, 6);
  std::vector<double> x(7, 1.0), e(7, 0.0);  // needs s+2 = 8
  CHECK_THROWS_AS(one_step(x, e, 0.0, p, DifferencingMode::Eq3Literal),
                  std::invalid_argument);

  SamParams bad = p;
  bad.ar = 1.0;
  std::vector<double> lx(20, 1.0), le(20, 0.0);
  CHECK_THROWS_AS(one_step(lx, le, 0.0, bad, DifferencingMode::Eq3Literal),
                  std::invalid_argument);
  bad = p;
  bad.sigma = -0.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.season = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("residuals invert the forward recursion in both modes") {
  for (DifferencingMode mode :
       {DifferencingMode::Eq3Literal, DifferencingMode::StandardSeasonal}) {
    const SamParams p = make_params(0.4, 0.3, 0.5, -0.4, 6);
    const std::size_t first = first_recursion_index(p.season, mode);
    std::vector<double> eps = gaussian_vector(400, 77, 1.0);
    for (std::size_t t = 0; t < first; ++t) eps[t] = 0.0;  // warm-up convention
    const std::vector<double> x = simulate_series(p, mode, eps, 100.0);

    const InnovationSeries rec = residuals(x, p, mode);
    REQUIRE(rec.size() == x.size());
    for (std::size_t t = 0; t < first; ++t) CHECK(rec[t] == 0.0);
    for (std::size_t t = first; t < x.size(); ++t)
      CHECK(rec[t] == doctest::Approx(eps[t]).epsilon(1e-9));
  }
}

TEST_CASE("residuals agree with the successive-filter oracle") {
  for (DifferencingMode mode :
       {DifferencingMode::Eq3Literal, DifferencingMode::StandardSeasonal}) {
    const SamParams p = make_params(-0.35, 0.25, 0.6, 0.45, 5);
    const std::vector<double> x = gaussian_vector(300, 99, 10.0);
    const InnovationSeries got = residuals(x, p, mode);
    const std::vector<double> want = oracles::filtered_residuals(x, p, mode);
    const std::size_t first = first_recursion_index(p.season, mode);
    for (std::size_t t = first; t < x.size(); ++t)
      CHECK(got[t] == doctest::Approx(want[t]).epsilon(1e-10));
  }
}

TEST_CASE("residuals reject series at or below the first computable index") {
  const SamParams p = make_params(0.1, 0.1, 0.1, 0.1, 4);
  std::vector<double> x(6, 1.0);  // first index for s=4 EQ3 is 6
  CHECK_THROWS_AS(residuals(x, p, DifferencingMode::Eq3Literal),
                  std::invalid_argument);
}

TEST_CASE("css_objective is shift-invariant in both modes") {
  for (DifferencingMode mode :
       {DifferencingMode::Eq3Literal, DifferencingMode::StandardSeasonal}) {
    const SamParams p = make_params(0.5, 0.3, 0.4, 0.6, 12);
    std::vector<double> x = gaussian_vector(500, 3, 5.0);
    for (double& v : x) v += 5000.0;
    const double base = css_objective(x, p, mode);
    std::vector<double> shifted = x;
    for (double& v : shifted) v += 12345.0;
    const double moved = css_objective(shifted, p, mode);
    CHECK(std::fabs(moved - base) <= 1e-6 * base);
  }
}

TEST_CASE("css_objective sums squares over exactly the post-warm-up range") {
  const SamParams p = make_params(0.2, -0.1, 0.3, 0.2, 4);
  const std::vector<double> x = gaussian_vector(100, 5, 2.0);
  const InnovationSeries eps = residuals(x, p, DifferencingMode::Eq3Literal);
  double want = 0.0;
  for (std::size_t t = warmup_length(4); t < eps.size(); ++t)
    want += eps[t] * eps[t];
  CHECK(css_objective(x, p, DifferencingMode::Eq3Literal) ==
        doctest::Approx(want).epsilon(1e-12));
  // Needs strictly more than 2s+2 values.
  std::vector<double> short_x(warmup_length(4), 1.0);
  CHECK_THROWS_AS(css_objective(short_x, p, DifferencingMode::Eq3Literal),
                  std::invalid_argument);
}

TEST_CASE("gaussian_loglik matches the closed form on zero residuals") {
  // A constant series has zero residuals under any coefficients, so with
  // n_eff = 10 and sigma = 1 the log-likelihood is -5*ln(2*pi).
  const SamParams p = make_params(0.3, 0.2, 0.1, 0.4, 2, 1.0);
  const std::vector<double> x(16, 100.0);  // warmup 6 -> n_eff = 10
  CHECK(gaussian_loglik(x, p, DifferencingMode::Eq3Literal) ==
        doctest::Approx(oracles::kLoglikTenZeros).epsilon(1e-12));

  SamParams no_sigma = p;
  no_sigma.sigma = 0.0;
  CHECK_THROWS_AS(gaussian_loglik(x, no_sigma, DifferencingMode::Eq3Literal),
                  std::invalid_argument);
}

TEST_CASE("gaussian_loglik is maximized near the generating sigma") {
  const SamParams gen = make_params(0.3, 0.2, 0.4, 0.3, 4, 2.0);
  std::vector<double> eps = gaussian_vector(600, 21, 2.0);
  const std::size_t first =
      first_recursion_index(gen.season, DifferencingMode::Eq3Literal);
  for (std::size_t t = 0; t < first; ++t) eps[t] = 0.0;
  const std::vector<double> x =
      simulate_series(gen, DifferencingMode::Eq3Literal, eps, 50.0);

  const double css = css_objective(x, gen, DifferencingMode::Eq3Literal);
  const double n_eff = static_cast<double>(x.size() - warmup_length(gen.season));
  const double sigma_hat = std::sqrt(css / n_eff);

  SamParams at = gen;
  at.sigma = sigma_hat;
  const double best = gaussian_loglik(x, at, DifferencingMode::Eq3Literal);
  for (double factor : {0.5, 0.8, 1.25, 2.0}) {
    at.sigma = sigma_hat * factor;
    CHECK(gaussian_loglik(x, at, DifferencingMode::Eq3Literal) < best);
  }
}
