#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "samtk/generation.hpp"
#include "samtk/rng.hpp"
#include "samtk/sam.hpp"
#include "support/oracles.hpp"

using namespace samtk;

TEST_CASE("splitmix64 reproduces the reference streams") {
  SplitMix64 zero(0);
  for (std::uint64_t want : oracles::kSplitMix64Seed0)
    CHECK(zero.next_u64() == want);
  SplitMix64 fortytwo(42);
  for (std::uint64_t want : oracles::kSplitMix64Seed42)
    CHECK(fortytwo.next_u64() == want);
}

TEST_CASE("uniform doubles live in [0, 1) with 53-bit resolution") {
  SplitMix64 rng(7);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("gaussian draws have the right first four moments") {
  SplitMix64 rng(1234);
  const int n = 200000;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.next_gaussian();
    s1 += g;
    s2 += g * g;
    s3 += g * g * g;
    s4 += g * g * g * g;
  }
  const double nn = static_cast<double>(n);
  CHECK(std::fabs(s1 / nn) < 0.01);
  CHECK(s2 / nn == doctest::Approx(1.0).epsilon(0.01));
  CHECK(std::fabs(s3 / nn) < 0.03);
  CHECK(s4 / nn == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("split() yields a stream decoupled from the parent") {
  SplitMix64 parent(5);
  SplitMix64 child = parent.split();
  SplitMix64 parent_again(5);
  parent_again.split();
  // The parent continues exactly as if only the split draw happened.
  CHECK(parent.next_u64() == parent_again.next_u64());
  // And the child differs from the parent's continuation.
  SplitMix64 p2(5);
  p2.split();
  CHECK(child.next_u64() != p2.next_u64());
}

namespace {

SamParams demo_params(int season = 6, double sigma = 3.0) {
  SamParams p;
  p.ar = 0.4;
  p.ma = 0.2;
  p.sar = 0.5;
  p.sma = 0.3;
  p.season = season;
  p.sigma = sigma;
  return p;
}

}  // namespace

TEST_CASE("output arrays are index-aligned and sized by length") {
  GenerationConfig cfg;
  cfg.length = 257;
  cfg.seed = 5;
  cfg.init_level = 100.0;
  const GenerationResult r =
      generate_series(demo_params(), DifferencingMode::Eq3Literal, cfg);
  CHECK(r.trace.size() == 257);
  CHECK(r.levels.size() == 257);
  CHECK(r.innovations.size() == 257);
  CHECK(r.trace.frame_rate == 30.0);
  CHECK(r.trace.source.find("seed=5") != std::string::npos);
}

TEST_CASE("same seed reproduces bit-identical output, new seed differs") {
  GenerationConfig cfg;
  cfg.length = 500;
  cfg.seed = 99;
  cfg.init_level = 2000.0;
  const auto a = generate_series(demo_params(), DifferencingMode::Eq3Literal, cfg);
  const auto b = generate_series(demo_params(), DifferencingMode::Eq3Literal, cfg);
  CHECK(a.levels == b.levels);
  CHECK(a.innovations == b.innovations);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace.frames[i].size == b.trace.frames[i].size);

  cfg.seed = 100;
  const auto c = generate_series(demo_params(), DifferencingMode::Eq3Literal, cfg);
  CHECK(a.levels != c.levels);
}

TEST_CASE("warm-up indices hold init_level with zero innovation") {
  const SamParams p = demo_params(8);
  GenerationConfig cfg;
  cfg.length = 100;
  cfg.seed = 3;
  cfg.burn_in = 0;
  cfg.init_level = 42.0;
  const auto r = generate_series(p, DifferencingMode::Eq3Literal, cfg);
  const std::size_t first =
      first_recursion_index(p.season, DifferencingMode::Eq3Literal);
  for (std::size_t t = 0; t < first; ++t) {
    CHECK(r.levels[t] == 42.0);
    CHECK(r.innovations[t] == 0.0);
  }
  CHECK(r.innovations[first] != 0.0);
}

TEST_CASE("burn-in is a pure slice of the same recursion") {
  const SamParams p = demo_params();
  GenerationConfig full;
  full.length = 200;
  full.seed = 77;
  full.burn_in = 0;
  full.init_level = 300.0;
  GenerationConfig cut = full;
  cut.burn_in = 50;
  cut.length = 150;

  const auto a = generate_series(p, DifferencingMode::Eq3Literal, full);
  const auto b = generate_series(p, DifferencingMode::Eq3Literal, cut);
  REQUIRE(b.levels.size() == 150);
  for (std::size_t i = 0; i < 150; ++i) {
    CHECK(b.levels[i] == a.levels[i + 50]);
    CHECK(b.innovations[i] == a.innovations[i + 50]);
  }
}

TEST_CASE("default burn-in is ten seasons") {
  GenerationConfig cfg;
  CHECK(cfg.burn_in == -1);
  CHECK(cfg.effective_burn_in(12) == 120);
  cfg.burn_in = 7;
  CHECK(cfg.effective_burn_in(12) == 7);
}

TEST_CASE("frame sizes are the clamped, rounded levels") {
  const SamParams p = demo_params(4, 50.0);
  GenerationConfig cfg;
  cfg.length = 400;
  cfg.seed = 12;
  cfg.init_level = 60.0;  // wanders negative quickly with sigma 50
  cfg.clamp_floor = 100.0;
  const auto r = generate_series(p, DifferencingMode::Eq3Literal, cfg);
  bool clamped_any = false;
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const double expect = std::max(r.levels[i], 100.0);
    CHECK(r.trace.frames[i].size == std::llround(expect));
    CHECK(r.trace.frames[i].size >= 100);
    if (r.levels[i] < 100.0) clamped_any = true;
  }
  CHECK(clamped_any);  // the scenario must actually exercise the floor
}

TEST_CASE("sigma zero with zero coefficients holds the level forever") {
  SamParams p;
  p.season = 5;
  p.sigma = 0.0;
  GenerationConfig cfg;
  cfg.length = 50;
  cfg.init_level = 123.4;
  const auto r = generate_series(p, DifferencingMode::Eq3Literal, cfg);
  for (double v : r.levels) CHECK(v == 123.4);
  for (const Frame& f : r.trace.frames) CHECK(f.size == 123);
}

TEST_CASE("emitted innovations past burn-in match the configured sigma") {
  const SamParams p = demo_params(6, 7.5);
  GenerationConfig cfg;
  cfg.length = 5000;
  cfg.seed = 321;
  cfg.init_level = 1000.0;  // default burn_in = 60 clears the warm-up
  const auto r = generate_series(p, DifferencingMode::Eq3Literal, cfg);

  double mean = 0.0;
  for (double e : r.innovations) mean += e;
  mean /= static_cast<double>(r.innovations.size());
  double var = 0.0;
  for (double e : r.innovations) var += (e - mean) * (e - mean);
  var /= static_cast<double>(r.innovations.size() - 1);
  CHECK(std::fabs(mean) < 0.3);
  CHECK(std::sqrt(var) == doctest::Approx(7.5).epsilon(0.05));
}

TEST_CASE("config and parameter validation") {
  const SamParams p = demo_params();
  GenerationConfig cfg;
  cfg.length = 0;
  CHECK_THROWS_AS(generate(p, DifferencingMode::Eq3Literal, cfg),
                  std::invalid_argument);
  cfg.length = 10;
  cfg.clamp_floor = -1.0;
  CHECK_THROWS_AS(generate(p, DifferencingMode::Eq3Literal, cfg),
                  std::invalid_argument);
  cfg.clamp_floor = 0.0;
  cfg.burn_in = -5;
  CHECK_THROWS_AS(generate(p, DifferencingMode::Eq3Literal, cfg),
                  std::invalid_argument);
  cfg.burn_in = 0;
  cfg.frame_rate = 0.0;
  CHECK_THROWS_AS(generate(p, DifferencingMode::Eq3Literal, cfg),
                  std::invalid_argument);

  SamParams bad = p;
  bad.sar = -1.5;
  cfg = GenerationConfig{};
  cfg.length = 10;
  CHECK_THROWS_AS(generate(bad, DifferencingMode::Eq3Literal, cfg),
                  std::invalid_argument);
}
