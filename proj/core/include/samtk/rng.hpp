#pragma once

#include <cmath>
#include <cstdint>

namespace samtk {

// Identifier recorded in generated-trace metadata so a trace can be
// reproduced bit-for-bit by an independent implementation.
inline constexpr const char* kRngAlgorithm = "splitmix64/polar-gaussian";

/// SplitMix64 generator (Steele, Lea & Flood), as in Vigna's reference code.
/// 64 bits of state, one avalanche per output. Deliberately not
/// std::mt19937: the stream must be stable across platforms and standard
/// library versions, and std::normal_distribution is not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via the Marsaglia polar method; pairs are cached, so
  /// consecutive calls consume an uneven number of uniforms by design.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  /// Child stream seeded from this stream's next output.
  SplitMix64 split() { return SplitMix64(next_u64()); }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace samtk
