#pragma once

#include <cstdint>
#include <string>

#include "noisy_search/search_model.hpp"

namespace noisy_search {

/// Which true index each trial searches for.
class TargetPolicy {
 public:
  static TargetPolicy fixed(Index target) noexcept { return TargetPolicy(false, target); }
  static TargetPolicy uniform() noexcept { return TargetPolicy(true, 0); }

  bool is_uniform() const noexcept { return uniform_; }
  /// Meaningful only when !is_uniform().
  Index target() const noexcept { return target_; }

  /// "average" or "fixed:<t>".
  std::string label() const;

  friend bool operator==(const TargetPolicy&, const TargetPolicy&) = default;

 private:
  TargetPolicy(bool uniform, Index target) noexcept : uniform_(uniform), target_(target) {}

  bool uniform_;
  Index target_;
};

inline constexpr std::uint64_t kMaxTrials = 0xFFFFFFFFULL;

struct MonteCarloEstimate {
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t error_sum = 0;
  unsigned __int128 error_sq_sum = 0;
  double mean = 0.0;
  double std_err = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

struct MonteCarloOptions {
  /// OpenMP worker count; 0 uses the runtime default.
  int workers = 0;
};

/// Plain Monte Carlo estimate of the expected search error. Trial i uses its
/// own generator seeded with substream_seed(master_seed, i); a uniform target
/// is drawn from that stream before any comparison. The result is a pure
/// function of (params, policy, trials, master_seed).
///
/// Throws std::domain_error for trials == 0, trials > kMaxTrials, or a fixed
/// target outside [0, n).
MonteCarloEstimate monte_carlo(const SearchParams& params, TargetPolicy policy,
                               std::uint64_t trials, std::uint64_t master_seed,
                               const MonteCarloOptions& options = {});

/// Single-threaded reference for monte_carlo.
MonteCarloEstimate monte_carlo_serial(const SearchParams& params,
                                      TargetPolicy policy, std::uint64_t trials,
                                      std::uint64_t master_seed);

/// Re-runs trial `trial_index` with the full decision trace.
SearchOutcome replay_trial(const SearchParams& params, TargetPolicy policy,
                           std::uint64_t master_seed, std::uint64_t trial_index);

/// Mean, standard error and 95% normal interval from exact integer sums.
MonteCarloEstimate summarize(std::uint64_t trials, std::uint64_t master_seed,
                             std::uint64_t error_sum,
                             unsigned __int128 error_sq_sum);

}  // namespace noisy_search
