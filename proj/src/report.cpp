#include "noisy_search/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace noisy_search {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string();
}

std::vector<TargetPolicy> PolicyChoice::expand(Index n) const {
  switch (kind) {
    case Kind::Fixed:
      return {TargetPolicy::fixed(target)};
    case Kind::Average:
      return {TargetPolicy::uniform()};
    case Kind::AllTargets: {
      std::vector<TargetPolicy> out;
      out.reserve(n);
      for (Index t = 0; t < n; ++t) out.push_back(TargetPolicy::fixed(t));
      return out;
    }
  }
  return {};
}

std::string bounds_row(const BoundReport& report) {
  std::ostringstream os;
  os << report.n << ',' << format_number(report.epsilon) << ','
     << format_number(report.lemma1) << ',' << format_number(report.lemma2)
     << ',' << format_optional(report.a_rec) << ','
     << format_optional(report.b_rec);
  return os.str();
}

std::string exact_row(const SearchParams& params, TargetPolicy policy,
                      double exact_error) {
  std::ostringstream os;
  os << params.n() << ',' << format_number(params.epsilon()) << ','
     << policy.label() << ',' << format_number(exact_error);
  return os.str();
}

std::string simulate_row(const SearchParams& params, TargetPolicy policy,
                         const MonteCarloEstimate& est) {
  std::ostringstream os;
  os << params.n() << ',' << format_number(params.epsilon()) << ','
     << policy.label() << ',' << est.trials << ',' << est.master_seed << ','
     << est.error_sum << ',' << format_number(est.mean) << ','
     << format_number(est.std_err) << ',' << format_number(est.ci95_low) << ','
     << format_number(est.ci95_high);
  return os.str();
}

namespace {

void validate(const SweepConfig& config) {
  if (config.n_values.empty()) throw std::domain_error("sweep needs at least one n");
  if (config.epsilons.empty()) throw std::domain_error("sweep needs at least one epsilon");
  for (const Index n : config.n_values) {
    (void)SearchParams(n, 0.0);
    if (config.policy.kind == PolicyChoice::Kind::Fixed && config.policy.target >= n) {
      throw std::domain_error("fixed target " + std::to_string(config.policy.target) +
                              " outside table of size " + std::to_string(n));
    }
  }
  for (const double eps : config.epsilons) (void)SearchParams(1, eps);
  if (config.trials > kMaxTrials) throw std::domain_error("trials must be below 2^32");
}

std::optional<double> sweep_exact(const SweepConfig& config,
                                  const SearchParams& params,
                                  TargetPolicy policy, std::ostream& warnings) {
  if (!config.exact) return std::nullopt;
  const Index cap = policy.is_uniform() ? config.oracle.average_cap : config.target_cap;
  if (params.n() > cap) {
    warnings << "warning: n=" << params.n() << " eps="
             << format_number(params.epsilon()) << " policy=" << policy.label()
             << ": exact oracle cap " << cap
             << " exceeded, exact_error left empty\n";
    return std::nullopt;
  }
  if (policy.is_uniform()) return exact_average_error(params, config.oracle).average;
  return exact_expected_error(params, policy.target());
}

}  // namespace

void write_sweep(const SweepConfig& config, std::ostream& out,
                 std::ostream& warnings) {
  validate(config);
  out << kSweepHeader << '\n';
  for (const Index n : config.n_values) {
    for (const double eps : config.epsilons) {
      const SearchParams params(n, eps);
      const BoundReport bounds = evaluate_bounds(params);
      for (const TargetPolicy policy : config.policy.expand(n)) {
        const std::optional<double> exact = sweep_exact(config, params, policy, warnings);
        std::string mc_mean;
        std::string mc_stderr;
        if (config.trials > 0) {
          const MonteCarloEstimate est =
              monte_carlo(params, policy, config.trials, config.seed, config.monte_carlo);
          mc_mean = format_number(est.mean);
          mc_stderr = format_number(est.std_err);
        }
        out << n << ',' << format_number(eps) << ',' << policy.label() << ','
            << format_optional(exact) << ',' << mc_mean << ',' << mc_stderr << ','
            << config.trials << ',' << format_number(bounds.lemma1) << ','
            << format_number(bounds.lemma2) << ',' << format_optional(bounds.a_rec)
            << ',' << format_optional(bounds.b_rec) << ',' << config.seed << '\n';
      }
    }
  }
}

std::string render_sweep(const SweepConfig& config, std::ostream& warnings) {
  std::ostringstream os;
  write_sweep(config, os, warnings);
  return os.str();
}

}  // namespace noisy_search
