#pragma once

#include <array>
#include <cstdint>

namespace noisy_search {

/// SplitMix64 finaliser (Steele, Lea and Flood). Bijective avalanche on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Seed of trial `trial_index` under `master_seed`.
///
/// This is the trial_index-th output of a SplitMix64 stream seeded with
/// master_seed, i.e. mix64(master_seed + (trial_index + 1) * gamma). It is
/// part of the reproducibility contract: any implementation using the same
/// derivation and the same generator reproduces error_sum exactly.
constexpr std::uint64_t substream_seed(std::uint64_t master_seed,
                                       std::uint64_t trial_index) noexcept {
  return mix64(master_seed + (trial_index + 1) * kGoldenGamma);
}

/// xoshiro256** 1.0 (Blackman and Vigna), seeded from a single 64-bit value
/// by four successive SplitMix64 outputs as the authors recommend.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256StarStar(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += kGoldenGamma;
      word = mix64(x);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  friend constexpr bool operator==(const Xoshiro256StarStar&,
                                   const Xoshiro256StarStar&) = default;

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

using Rng = Xoshiro256StarStar;

/// Uniform double in [0, 1) with 53 random bits. Consumes one draw.
constexpr double uniform01(Rng& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, bound), bound >= 1 (Lemire's
/// multiply-shift with rejection). Usually consumes one draw.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) noexcept {
  using u128 = unsigned __int128;
  u128 m = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace noisy_search
