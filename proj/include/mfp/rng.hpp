#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace mfp {

/// Counter-based 64-bit generator (splitmix64). All randomness in the
/// project flows through this so that streams are portable across
/// implementations: the state advances by the golden-ratio increment and
/// the output is a bit-mix of the counter.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (cosine branch, two uniforms per draw,
  /// no cached state).
  double next_normal() {
    double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent substream seed. Substreams used by the trainer:
/// 0 interior sampling, 1 boundary sampling, 2 network init, 3 residual
/// network init.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(seed ^ (0xD1B54A32D192ED03ull * (stream + 1))).next_u64();
}

}  // namespace mfp
