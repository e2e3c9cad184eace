// rng.hpp -- deterministic seeded stream with non-overlapping substreams.
#pragma once

#include <cmath>
#include <cstdint>

namespace rsbench {

// SplitMix64 walked in fixed-size blocks. The underlying state sequence is
// state_n = base + n*GAMMA (mod 2^64); substream(seed, i) starts the walk at
// offset i*2^32, so distinct substream indices own disjoint blocks of 2^32
// draws each. Identical seed/index reproduces the draw sequence bit-exactly.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  static RngStream substream(std::uint64_t seed, std::uint64_t index) {
    RngStream s(seed + (index << 32) * kGamma);
    return s;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; consumes exactly two u64 draws.
  double normal() {
    double u1 = double((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  // Standard normal via a 128-layer ziggurat (Marsaglia-Tsang layout with a
  // 53-bit mantissa). Roughly an order of magnitude cheaper than normal()
  // because ~98.5% of draws need one u64 and one multiply; used by hot loops
  // that burn millions of Thompson draws. Consumes a variable number of u64s.
  double normal_fast();

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr double kPi = 3.14159265358979323846264338327950288;
  std::uint64_t state_;
};

}  // namespace rsbench
