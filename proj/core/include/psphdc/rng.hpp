#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace psphdc {

// Pinned generator for everything random in the project: SplitMix64
// (Steele, Lea & Flood 2014). Chosen because the full state is one 64-bit
// word and the update is exact integer arithmetic, so any language can
// regenerate identical streams from a seed. Gaussian draws use the
// Marsaglia polar method on top of the uniform stream.
//
// The checkpoint format records this algorithm under the identifier below;
// loading a checkpoint with a different identifier is an error.
inline constexpr const char* kRngAlgorithm = "splitmix64/polar-gaussian-v1";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via the polar method. The second variate of each
  // accepted pair is discarded; draw volume here is tiny (basis and
  // embedding init), so simplicity wins over stream thrift.
  double gaussian() {
    for (;;) {
      const double u = 2.0 * uniform01() - 1.0;
      const double v = 2.0 * uniform01() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        return u * std::sqrt(-2.0 * std::log(s) / s);
      }
    }
  }

  // +1 or -1 with equal probability.
  double bipolar() { return (next() & 1ull) ? 1.0 : -1.0; }

  // Uniform integer in [0, bound) by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a base seed and a stream tag.
// Pinned definition: one SplitMix64 step of base XOR golden-ratio-scaled tag.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  SplitMix64 g(base ^ (0x9E3779B97F4A7C15ull * (tag + 1)));
  return g.next();
}

// Stream tags for the derived seeds used across the project.
inline constexpr std::uint64_t kStreamBasis = 1;
inline constexpr std::uint64_t kStreamEmbeddings = 2;
inline constexpr std::uint64_t kStreamSplits = 3;
inline constexpr std::uint64_t kStreamSynthetic = 4;

// Fisher-Yates shuffle driven by SplitMix64. std::shuffle is
// implementation-defined, so split plans pin this one.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  if (items.size() < 2) return;
  for (std::size_t i = items.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(items[i], items[j]);
  }
}

}  // namespace psphdc
