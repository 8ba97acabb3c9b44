#include "samtk/generation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "samtk/rng.hpp"

namespace samtk {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("generation: " + what);
}

}  // namespace

void GenerationConfig::validate() const {
  if (length < 1) fail("length must be at least 1");
  if (burn_in < -1) fail("burn_in must be -1 (default) or >= 0");
  if (!std::isfinite(init_level)) fail("init_level must be finite");
  if (!std::isfinite(clamp_floor) || clamp_floor < 0.0)
    fail("clamp_floor must be a non-negative number");
  if (!(frame_rate > 0.0)) fail("frame_rate must be positive");
}

GenerationResult generate_series(const SamParams& params, DifferencingMode mode,
                                 const GenerationConfig& config) {
  params.validate();
  config.validate();
  const std::int64_t burn = config.effective_burn_in(params.season);
  if (burn < 0) fail("burn_in must be >= 0");

  const std::size_t total = static_cast<std::size_t>(burn + config.length);
  const std::size_t first = first_recursion_index(params.season, mode);

  // The recursion runs in reals over burn-in + emitted range; warm-up
  // indices sit at the configured level with zero innovation.
  std::vector<double> levels(total);
  InnovationSeries eps(total, 0.0);
  SplitMix64 rng(config.seed);

  for (std::size_t t = 0; t < total; ++t) {
    if (t < first) {
      levels[t] = config.init_level;
      continue;
    }
    eps[t] = params.sigma * rng.next_gaussian();
    levels[t] = one_step(std::span<const double>(levels.data(), t),
                         std::span<const double>(eps.data(), t), eps[t],
                         params, mode);
  }

  GenerationResult result;
  result.trace.frame_rate = config.frame_rate;
  result.trace.source = "sam-generator(seed=" + std::to_string(config.seed) + ")";
  result.trace.frames.reserve(static_cast<std::size_t>(config.length));
  const std::size_t from = static_cast<std::size_t>(burn);
  result.levels.assign(levels.begin() + static_cast<std::ptrdiff_t>(from),
                       levels.end());
  result.innovations.assign(eps.begin() + static_cast<std::ptrdiff_t>(from),
                            eps.end());
  for (double level : result.levels) {
    const double clamped = std::max(level, config.clamp_floor);
    result.trace.frames.push_back(
        {FrameKind::Unknown, static_cast<std::int64_t>(std::llround(clamped))});
  }
  return result;
}

FrameTrace generate(const SamParams& params, DifferencingMode mode,
                    const GenerationConfig& config) {
  return generate_series(params, mode, config).trace;
}

}  // namespace samtk
