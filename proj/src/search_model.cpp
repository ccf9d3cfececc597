#include "noisy_search/search_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace noisy_search {

SearchParams::SearchParams(Index n, double epsilon) : n_(n), epsilon_(epsilon) {
  if (n < 1 || n > kMaxTableSize) {
    throw std::domain_error("table size must be in [1, 2^31], got " +
                            std::to_string(n));
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::domain_error("epsilon must be in [0, 1], got " +
                            std::to_string(epsilon));
  }
}

SearchOutcome run_noisy_search(const SearchParams& params, Index true_index,
                               Rng& rng) {
  if (true_index >= params.n()) {
    throw std::domain_error("true index " + std::to_string(true_index) +
                            " outside table of size " +
                            std::to_string(params.n()));
  }

  SearchOutcome out;
  out.true_index = true_index;
  out.decisions.reserve(ceil_log2(params.n()));

  Index lo = 0;
  Index hi = params.n();
  while (hi - lo > 1) {
    const Index probe = lo + (hi - lo) / 2;
    const Direction truth = truth_direction(true_index, probe);
    const Direction taken =
        noisy_compare(true_index, probe, params.epsilon(), rng);
    out.decisions.push_back({probe, truth, taken});
    if (taken == Direction::Left) {
      hi = probe;
    } else {
      lo = probe;
    }
  }

  out.returned_index = lo;
  out.error = lo > true_index ? lo - true_index : true_index - lo;
  out.comparisons = static_cast<std::uint32_t>(out.decisions.size());
  return out;
}

}  // namespace noisy_search
