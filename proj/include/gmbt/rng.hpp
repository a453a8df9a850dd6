#pragma once

#include <cstdint>

namespace gmbt {

// Deterministic splittable random source, SplitMix64 (Steele/Lea/Flood;
// Vigna's fixed-increment variant). A stream is identified by
// (seed, stream_id): equal identifiers give bit-identical sequences, and
// distinct stream_ids start at independently mixed counter offsets, so
// streams created for different grid points or replications do not overlap
// in practice. Plain value type; cheap to copy and to send across threads.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}

  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : state_(mix64(mix64(seed + kGolden) + stream_id * kGolden)) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace gmbt
