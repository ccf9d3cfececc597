#include "noisy_search/exact_oracle.hpp"

#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace noisy_search {

namespace {

double subtree_expectation(Index lo, Index hi, Index target, double eps) {
  if (hi - lo == 1) {
    return static_cast<double>(lo > target ? lo - target : target - lo);
  }
  const Index probe = lo + (hi - lo) / 2;
  const double left = subtree_expectation(lo, probe, target, eps);
  const double right = subtree_expectation(probe, hi, target, eps);
  return truth_direction(target, probe) == Direction::Left
             ? (1.0 - eps) * left + eps * right
             : (1.0 - eps) * right + eps * left;
}

void check_cap(const SearchParams& params, const OracleOptions& options) {
  if (params.n() > options.average_cap) {
    throw ResourceError("exact average for n = " + std::to_string(params.n()) +
                        " exceeds the cap of " +
                        std::to_string(options.average_cap) +
                        "; use Monte Carlo instead");
  }
}

ExactErrorReport make_report(const SearchParams& params) {
  ExactErrorReport report;
  report.n = params.n();
  report.epsilon = params.epsilon();
  report.per_target.resize(params.n());
  return report;
}

// Summed in index order so the mean is independent of evaluation order.
void finish_average(ExactErrorReport& report) {
  double sum = 0.0;
  for (const double e : report.per_target) sum += e;
  report.average = sum / static_cast<double>(report.n);
}

}  // namespace

double exact_expected_error(const SearchParams& params, Index true_index) {
  if (true_index >= params.n()) {
    throw std::domain_error("true index " + std::to_string(true_index) +
                            " outside table of size " +
                            std::to_string(params.n()));
  }
  return subtree_expectation(0, params.n(), true_index, params.epsilon());
}

ExactErrorReport exact_average_error(const SearchParams& params,
                                     const OracleOptions& options) {
  check_cap(params, options);
  ExactErrorReport report = make_report(params);
  const auto n = static_cast<std::int64_t>(params.n());
  const double eps = params.epsilon();
  double* out = report.per_target.data();

#ifdef _OPENMP
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
#endif
  for (std::int64_t t = 0; t < n; ++t) {
    out[t] = subtree_expectation(0, static_cast<Index>(n),
                                 static_cast<Index>(t), eps);
  }

  finish_average(report);
  return report;
}

ExactErrorReport exact_average_error_serial(const SearchParams& params,
                                            const OracleOptions& options) {
  check_cap(params, options);
  ExactErrorReport report = make_report(params);
  for (Index t = 0; t < params.n(); ++t) {
    report.per_target[t] =
        subtree_expectation(0, params.n(), t, params.epsilon());
  }
  finish_average(report);
  return report;
}

}  // namespace noisy_search
