#pragma once

#include <cstdint>
#include <vector>

#include "noisy_search/rng.hpp"

namespace noisy_search {

using Index = std::uint64_t;

/// Largest supported table size. Keeps error^2 sums exact in 128-bit integers.
inline constexpr Index kMaxTableSize = Index{1} << 31;

/// Table size and per-comparison flip probability.
class SearchParams {
 public:
  /// Throws std::domain_error unless 1 <= n <= kMaxTableSize and
  /// 0 <= epsilon <= 1.
  SearchParams(Index n, double epsilon);

  Index n() const noexcept { return n_; }
  double epsilon() const noexcept { return epsilon_; }

  friend bool operator==(const SearchParams&, const SearchParams&) = default;

 private:
  Index n_;
  double epsilon_;
};

/// Left narrows to the lower half (hi <- probe), Right to the upper half
/// (lo <- probe).
enum class Direction : std::uint8_t { Left, Right };

constexpr Direction opposite(Direction d) noexcept {
  return d == Direction::Left ? Direction::Right : Direction::Left;
}

/// Noise-free answer. Equality resolves to Right so the target stays in the
/// retained half.
constexpr Direction truth_direction(Index true_index, Index probe) noexcept {
  return true_index < probe ? Direction::Left : Direction::Right;
}

struct Decision {
  Index probe;
  Direction truth;
  Direction taken;

  friend bool operator==(const Decision&, const Decision&) = default;
};

struct SearchOutcome {
  Index returned_index = 0;
  Index true_index = 0;
  Index error = 0;
  std::uint32_t comparisons = 0;
  std::vector<Decision> decisions;

  friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;
};

/// Trace-free result of one run; identical to the first fields of
/// SearchOutcome for the same rng state.
struct SearchResult {
  Index returned_index = 0;
  Index error = 0;
  std::uint32_t comparisons = 0;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Flip iff the single uniform draw u satisfies u < epsilon.
inline Direction noisy_compare(Index true_index, Index probe, double epsilon,
                               Rng& rng) noexcept {
  const Direction truth = truth_direction(true_index, probe);
  return uniform01(rng) < epsilon ? opposite(truth) : truth;
}

/// One imperfect binary search over [0, n) with the full decision trace.
/// Throws std::domain_error if true_index >= n.
SearchOutcome run_noisy_search(const SearchParams& params, Index true_index,
                               Rng& rng);

/// Hot-path variant of run_noisy_search without the trace. Caller guarantees
/// true_index < n.
inline SearchResult run_noisy_search_fast(Index n, double epsilon,
                                          Index true_index, Rng& rng) noexcept {
  Index lo = 0;
  Index hi = n;
  std::uint32_t steps = 0;
  while (hi - lo > 1) {
    const Index probe = lo + (hi - lo) / 2;
    if (noisy_compare(true_index, probe, epsilon, rng) == Direction::Left) {
      hi = probe;
    } else {
      lo = probe;
    }
    ++steps;
  }
  const Index error = lo > true_index ? lo - true_index : true_index - lo;
  return {lo, error, steps};
}

/// ceil(log2 n) for n >= 1; the comparison count for power-of-two tables
/// and the maximum over all runs otherwise.
constexpr std::uint32_t ceil_log2(Index n) noexcept {
  std::uint32_t k = 0;
  while ((Index{1} << k) < n) ++k;
  return k;
}

constexpr bool is_power_of_two(Index n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace noisy_search
