#pragma once

#include <stdexcept>
#include <vector>

#include "noisy_search/search_model.hpp"

namespace noisy_search {

/// Raised when an exact computation would exceed its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Index kDefaultAverageCap = Index{1} << 14;

struct ExactErrorReport {
  Index n = 1;
  double epsilon = 0.0;
  std::vector<double> per_target;  // indexed by true index
  double average = 0.0;
};

struct OracleOptions {
  /// Largest n accepted by exact_average_error (cost is O(n^2)).
  Index average_cap = kDefaultAverageCap;
  /// OpenMP worker count; 0 uses the runtime default.
  int workers = 0;
};

/// Exact E|returned - true| for one target, by walking the 2n - 1 node
/// interval tree of the search loop with edge probabilities (1 - eps, eps).
/// Throws std::domain_error if true_index >= n.
double exact_expected_error(const SearchParams& params, Index true_index);

/// Exact expected error for every target and their uniform mean. Targets are
/// evaluated in parallel; results do not depend on the worker count.
/// Throws ResourceError if n exceeds options.average_cap.
ExactErrorReport exact_average_error(const SearchParams& params,
                                     const OracleOptions& options = {});

/// Single-threaded reference for exact_average_error.
ExactErrorReport exact_average_error_serial(const SearchParams& params,
                                            const OracleOptions& options = {});

}  // namespace noisy_search
