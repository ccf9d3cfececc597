#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "noisy_search/analytic_bounds.hpp"
#include "noisy_search/exact_oracle.hpp"
#include "noisy_search/monte_carlo.hpp"

namespace noisy_search {

// CSV rendering shared by the command line tool and the tests. Numbers use
// 12 significant digits ("%.12g"), '.' as decimal separator and '\n' line
// endings, so output is byte-stable for a given configuration.

std::string format_number(double value);
std::string format_optional(const std::optional<double>& value);

inline constexpr const char* kBoundsHeader = "n,epsilon,lemma1,lemma2,a_rec,b_rec";
inline constexpr const char* kExactHeader = "n,epsilon,policy,exact_error";
inline constexpr const char* kSimulateHeader =
    "n,epsilon,policy,trials,seed,error_sum,mean,stderr,ci95_low,ci95_high";
inline constexpr const char* kSweepHeader =
    "n,epsilon,policy,exact_error,mc_mean,mc_stderr,mc_trials,lemma1_bound,"
    "lemma2_value,a_rec,b_rec,seed";

/// How targets are chosen across a sweep. AllTargets expands to one fixed
/// target per index of each table.
struct PolicyChoice {
  enum class Kind { Fixed, Average, AllTargets };
  Kind kind = Kind::Average;
  Index target = 0;

  static PolicyChoice fixed(Index t) { return {Kind::Fixed, t}; }
  static PolicyChoice average() { return {Kind::Average, 0}; }
  static PolicyChoice all_targets() { return {Kind::AllTargets, 0}; }

  /// Concrete policies for a table of size n, in row order.
  std::vector<TargetPolicy> expand(Index n) const;
};

inline constexpr Index kDefaultTargetCap = Index{1} << 24;

struct SweepConfig {
  std::vector<Index> n_values;
  std::vector<double> epsilons;
  PolicyChoice policy = PolicyChoice::average();
  std::uint64_t trials = 0;  // 0 skips Monte Carlo
  std::uint64_t seed = 0;
  bool exact = false;
  OracleOptions oracle;
  /// Largest n for which a single-target exact value is computed.
  Index target_cap = kDefaultTargetCap;
  MonteCarloOptions monte_carlo;
};

std::string bounds_row(const BoundReport& report);
std::string exact_row(const SearchParams& params, TargetPolicy policy,
                      double exact_error);
std::string simulate_row(const SearchParams& params, TargetPolicy policy,
                         const MonteCarloEstimate& estimate);

/// Writes the sweep CSV (header plus one row per (n, epsilon, target policy))
/// in configuration order. Cells whose oracle would exceed a cap get an empty
/// exact_error and a warning line on `warnings`.
/// Throws std::domain_error for an invalid configuration.
void write_sweep(const SweepConfig& config, std::ostream& out,
                 std::ostream& warnings);

std::string render_sweep(const SweepConfig& config, std::ostream& warnings);

}  // namespace noisy_search
