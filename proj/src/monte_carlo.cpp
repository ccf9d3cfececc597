#include "noisy_search/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace noisy_search {

namespace {

using u128 = unsigned __int128;

constexpr double kZ95 = 1.96;

void validate(const SearchParams& params, TargetPolicy policy,
              std::uint64_t trials) {
  if (trials == 0) throw std::domain_error("trials must be at least 1");
  if (trials > kMaxTrials) throw std::domain_error("trials must be below 2^32");
  if (!policy.is_uniform() && policy.target() >= params.n()) {
    throw std::domain_error("fixed target " + std::to_string(policy.target()) +
                            " outside table of size " +
                            std::to_string(params.n()));
  }
}

Index draw_target(TargetPolicy policy, Index n, Rng& rng) {
  return policy.is_uniform() ? uniform_below(rng, n) : policy.target();
}

Index run_trial(const SearchParams& params, TargetPolicy policy,
                std::uint64_t master_seed, std::uint64_t i) {
  Rng rng(substream_seed(master_seed, i));
  const Index target = draw_target(policy, params.n(), rng);
  return run_noisy_search_fast(params.n(), params.epsilon(), target, rng).error;
}

}  // namespace

std::string TargetPolicy::label() const {
  return uniform_ ? std::string("average") : "fixed:" + std::to_string(target_);
}

MonteCarloEstimate summarize(std::uint64_t trials, std::uint64_t master_seed,
                             std::uint64_t error_sum, u128 error_sq_sum) {
  MonteCarloEstimate est;
  est.trials = trials;
  est.master_seed = master_seed;
  est.error_sum = error_sum;
  est.error_sq_sum = error_sq_sum;
  est.mean = static_cast<double>(error_sum) / static_cast<double>(trials);

  if (trials > 1) {
    // N * sum(x^2) - (sum x)^2 >= 0, exact in 128 bits for n <= 2^31, N < 2^32.
    const u128 centered = static_cast<u128>(trials) * error_sq_sum -
                          static_cast<u128>(error_sum) * error_sum;
    const long double var = static_cast<long double>(centered) /
                            (static_cast<long double>(trials) *
                             static_cast<long double>(trials - 1));
    est.std_err = static_cast<double>(std::sqrt(var / trials));
  }
  est.ci95_low = est.mean - kZ95 * est.std_err;
  est.ci95_high = est.mean + kZ95 * est.std_err;
  return est;
}

MonteCarloEstimate monte_carlo(const SearchParams& params, TargetPolicy policy,
                               std::uint64_t trials, std::uint64_t master_seed,
                               const MonteCarloOptions& options) {
  validate(params, policy, trials);

  std::uint64_t sum = 0;
  u128 sq_sum = 0;
  const auto count = static_cast<std::int64_t>(trials);

#ifdef _OPENMP
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel num_threads(workers)
#else
  (void)options;
#endif
  {
    std::uint64_t local_sum = 0;
    u128 local_sq = 0;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
      const Index err = run_trial(params, policy, master_seed,
                                  static_cast<std::uint64_t>(i));
      local_sum += err;
      local_sq += static_cast<u128>(err) * err;
    }
#ifdef _OPENMP
#pragma omp critical(noisy_search_mc_reduce)
#endif
    {
      sum += local_sum;
      sq_sum += local_sq;
    }
  }

  return summarize(trials, master_seed, sum, sq_sum);
}

MonteCarloEstimate monte_carlo_serial(const SearchParams& params,
                                      TargetPolicy policy, std::uint64_t trials,
                                      std::uint64_t master_seed) {
  validate(params, policy, trials);
  std::uint64_t sum = 0;
  u128 sq_sum = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Index err = run_trial(params, policy, master_seed, i);
    sum += err;
    sq_sum += static_cast<u128>(err) * err;
  }
  return summarize(trials, master_seed, sum, sq_sum);
}

SearchOutcome replay_trial(const SearchParams& params, TargetPolicy policy,
                           std::uint64_t master_seed, std::uint64_t trial_index) {
  validate(params, policy, 1);
  Rng rng(substream_seed(master_seed, trial_index));
  const Index target = draw_target(policy, params.n(), rng);
  return run_noisy_search(params, target, rng);
}

}  // namespace noisy_search
