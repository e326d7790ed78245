#pragma once

#include <cstdint>
#include <string_view>

namespace k3cert {

// All randomness in the library derives from a 64-bit master seed:
//   stream seed = mix(master ^ fnv1a(stream name))
//   trial seed  = mix(stream seed + trial index * golden gamma)
// and each trial runs its own SplitMix64 generator. Trials are therefore
// independent of execution order, and no ambient entropy is ever read.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

inline constexpr std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline constexpr std::uint64_t stream_seed(std::uint64_t master, std::string_view stream) {
  return mix64(master ^ fnv1a(stream));
}

inline constexpr std::uint64_t trial_seed(std::uint64_t stream, std::uint64_t index) {
  return mix64(stream + (index + 1) * kGoldenGamma);
}

/// SplitMix64 generator with unbiased bounded draws.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  /// Uniform integer in [0, n), n >= 1, by rejection.
  constexpr std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  /// Uniform integer in [lo, hi].
  constexpr std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
  }

  constexpr bool coin() { return (next() >> 63U) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace k3cert
