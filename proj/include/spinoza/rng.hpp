#pragma once

#include <cstdint>
#include <stdexcept>

namespace spinoza {

/// xorshift64* with the canonical shift triple (12, 25, 27) and multiplier
/// 0x2545F4914F6CDD1D. The shift register must stay nonzero, so seed 0 is
/// remapped to the splitmix gamma constant.
///
/// Instance generation must be byte-identical across platforms, which rules
/// out standard-library engines and distributions; this generator and the
/// rejection sampler below are the only randomness sources in the library.
class Xorshift64Star {
 public:
  static constexpr std::uint64_t kZeroSeedState = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kMultiplier = 0x2545F4914F6CDD1DULL;

  explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed == 0 ? kZeroSeedState : seed) {}

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * kMultiplier;
  }

  /// Uniform draw in [0, bound), unbiased via rejection: draws below
  /// 2^64 mod bound are discarded, the rest reduced.
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// splitmix64 finalizer; used to derive per-instance seeds from a master
/// seed without correlating the resulting xorshift streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic seed for the (a, b) slot of a run keyed by `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return splitmix64(master ^ (a * 0x9E3779B97F4A7C15ULL) ^
                    (b * 0xBF58476D1CE4E5B9ULL));
}

}  // namespace spinoza
