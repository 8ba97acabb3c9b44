#pragma once

#include <cstdint>
#include <vector>

#include "samtk/sam.hpp"
#include "samtk/trace.hpp"

namespace samtk {

struct GenerationConfig {
  std::int64_t length = 0;     // frames to emit, >= 1
  std::uint64_t seed = 0;      // all randomness flows from here
  std::int64_t burn_in = -1;   // discarded prefix; -1 means 10 * season
  double init_level = 0.0;     // warm-up level of the recursion
  double clamp_floor = 0.0;    // output floor in bytes, >= 0
  double frame_rate = 30.0;

  std::int64_t effective_burn_in(int season) const {
    return burn_in < 0 ? static_cast<std::int64_t>(10) * season : burn_in;
  }
  void validate() const;  // throws std::invalid_argument
};

/// A generated trace plus the real-valued recursion it was rounded from.
/// `levels` are the unclamped, unrounded values of the emitted slice and
/// `innovations` the Gaussian draws that produced them, index-aligned with
/// `trace.frames`.
struct GenerationResult {
  FrameTrace trace;
  std::vector<double> levels;
  InnovationSeries innovations;
};

/// Run the SAM recursion forward: warm-up indices hold init_level with zero
/// innovation, every later value is one_step() with e_t ~ N(0, sigma^2)
/// drawn from a SplitMix64 stream seeded by config.seed. The recursion runs
/// in reals; frame sizes are the emitted slice clamped to clamp_floor and
/// rounded half away from zero. Identical inputs yield identical output.
GenerationResult generate_series(const SamParams& params, DifferencingMode mode,
                                 const GenerationConfig& config);

/// Just the trace, for callers that do not need the real-valued series.
FrameTrace generate(const SamParams& params, DifferencingMode mode,
                    const GenerationConfig& config);

}  // namespace samtk
