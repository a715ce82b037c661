#pragma once

#include <cmath>
#include <cstdint>

namespace rqlost {

// SplitMix64 (the java.util.SplittableRandom finalizer). Chosen over
// std::mt19937_64 so streams are bit-identical across standard libraries and
// trivially cheap to derive.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1]: 53 random bits shifted into [1, 2^53] then scaled.
  // Never returns 0, so log() below is always finite.
  double next_unit() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Inverse-CDF exponential draw.
  double next_exponential(double rate) { return -std::log(next_unit()) / rate; }

 private:
  std::uint64_t state_;
};

// Deterministic per-cell seed: each key is folded in through a full SplitMix64
// scramble, so sweeps hand every cell an independent stream and parallel runs
// reproduce serial ones bit for bit.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c) {
  std::uint64_t s = SplitMix64(root).next();
  s = SplitMix64(s ^ a).next();
  s = SplitMix64(s ^ b).next();
  s = SplitMix64(s ^ c).next();
  return s;
}

}  // namespace rqlost
