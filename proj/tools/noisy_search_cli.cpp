// noisy_search: evaluate bounds, exact expectations and Monte Carlo estimates
// of the imperfect binary search, emitting CSV.
//
//   noisy_search bounds   --n 1024 --eps 0.1
//   noisy_search exact    --n 4 --eps 0.1 --average
//   noisy_search simulate --n 64 --eps 0.1 --target 0 --trials 1000000 --seed 42
//   noisy_search sweep    --n 4,8 --eps 0,0.1,1 --average --exact --trials 10000 --seed 42

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noisy_search/report.hpp"

namespace ns = noisy_search;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 2, kIo = 3, kResource = 4 };

struct Flags {
  std::vector<std::uint64_t> n_values;
  std::vector<double> epsilons;
  std::uint64_t target = 0;
  bool average = false;
  bool all_targets = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool exact = false;
  std::string out_path;
  std::string format = "csv";
  int threads = 0;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_grid_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--n", f.n_values, "Table sizes, comma separated")
      ->required()
      ->delimiter(',');
  cmd.add_option("--eps", f.epsilons, "Flip probabilities in [0,1], comma separated")
      ->required()
      ->delimiter(',');
  cmd.add_option("--out", f.out_path, "Output file (default: standard output)");
  cmd.add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv"}));
}

void add_policy_flags(CLI::App& cmd, Flags& f, bool with_all_targets) {
  auto* target = cmd.add_option("--target", f.target, "Fixed true index");
  auto* average = cmd.add_flag("--average", f.average, "Uniformly random true index");
  target->excludes(average);
  if (with_all_targets) {
    auto* all = cmd.add_flag("--all-targets", f.all_targets, "One row per true index");
    all->excludes(target)->excludes(average);
  }
}

void add_threads_flag(CLI::App& cmd, Flags& f) {
  cmd.add_option("--threads", f.threads, "Worker threads (0: OpenMP default)")
      ->check(CLI::NonNegativeNumber);
}

ns::PolicyChoice policy_choice(const CLI::App& cmd, const Flags& f) {
  if (f.all_targets) return ns::PolicyChoice::all_targets();
  if (cmd.count("--target") > 0) return ns::PolicyChoice::fixed(f.target);
  return ns::PolicyChoice::average();
}

// Buffers output so a failing run leaves no partial file behind.
void emit(const Flags& f, const std::string& text) {
  if (f.out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(f.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + f.out_path + "'");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing output file '" + f.out_path + "'");
}

std::string run_bounds(const Flags& f) {
  std::string text = std::string(ns::kBoundsHeader) + '\n';
  for (const auto n : f.n_values) {
    for (const double eps : f.epsilons) {
      text += ns::bounds_row(ns::evaluate_bounds(ns::SearchParams(n, eps))) + '\n';
    }
  }
  return text;
}

std::string run_exact(const CLI::App& cmd, const Flags& f) {
  const ns::PolicyChoice choice = policy_choice(cmd, f);
  const ns::OracleOptions options{ns::kDefaultAverageCap, f.threads};
  std::string text = std::string(ns::kExactHeader) + '\n';
  for (const auto n : f.n_values) {
    for (const double eps : f.epsilons) {
      const ns::SearchParams params(n, eps);
      if (choice.kind == ns::PolicyChoice::Kind::Fixed) {
        const auto policy = ns::TargetPolicy::fixed(choice.target);
        text += ns::exact_row(params, policy, ns::exact_expected_error(params, choice.target)) + '\n';
        continue;
      }
      const ns::ExactErrorReport report = ns::exact_average_error(params, options);
      if (choice.kind == ns::PolicyChoice::Kind::AllTargets) {
        for (ns::Index t = 0; t < n; ++t) {
          text += ns::exact_row(params, ns::TargetPolicy::fixed(t), report.per_target[t]) + '\n';
        }
      } else {
        text += ns::exact_row(params, ns::TargetPolicy::uniform(), report.average) + '\n';
      }
    }
  }
  return text;
}

std::string run_simulate(const CLI::App& cmd, const Flags& f) {
  const ns::PolicyChoice choice = policy_choice(cmd, f);
  const ns::MonteCarloOptions options{f.threads};
  std::string text = std::string(ns::kSimulateHeader) + '\n';
  for (const auto n : f.n_values) {
    for (const double eps : f.epsilons) {
      const ns::SearchParams params(n, eps);
      for (const auto policy : choice.expand(n)) {
        const auto est = ns::monte_carlo(params, policy, f.trials, f.seed, options);
        text += ns::simulate_row(params, policy, est) + '\n';
      }
    }
  }
  return text;
}

std::string run_sweep(const CLI::App& cmd, const Flags& f) {
  ns::SweepConfig config;
  config.n_values = f.n_values;
  config.epsilons = f.epsilons;
  config.policy = policy_choice(cmd, f);
  config.trials = f.trials;
  config.seed = f.seed;
  config.exact = f.exact;
  config.oracle.workers = f.threads;
  config.monte_carlo.workers = f.threads;
  return ns::render_sweep(config, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Imperfect binary search: error bounds, exact oracle and Monte Carlo"};
  app.require_subcommand(1);

  Flags f;

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and recurrences");
  add_grid_flags(*bounds, f);

  auto* exact = app.add_subcommand("exact", "Exact expected error by tree enumeration");
  add_grid_flags(*exact, f);
  add_policy_flags(*exact, f, true);
  add_threads_flag(*exact, f);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the expected error");
  add_grid_flags(*simulate, f);
  add_policy_flags(*simulate, f, false);
  simulate->add_option("--trials", f.trials, "Number of trials")->required();
  simulate->add_option("--seed", f.seed, "Master seed");
  add_threads_flag(*simulate, f);

  auto* sweep = app.add_subcommand("sweep", "Bounds, oracle and Monte Carlo over an (n, eps) grid");
  add_grid_flags(*sweep, f);
  add_policy_flags(*sweep, f, true);
  sweep->add_option("--trials", f.trials, "Monte Carlo trials per cell (0 skips)");
  sweep->add_option("--seed", f.seed, "Master seed");
  sweep->add_flag("--exact", f.exact, "Run the exact oracle where n is within its cap");
  add_threads_flag(*sweep, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::string text;
    if (bounds->parsed()) {
      text = run_bounds(f);
    } else if (exact->parsed()) {
      text = run_exact(*exact, f);
    } else if (simulate->parsed()) {
      text = run_simulate(*simulate, f);
    } else {
      text = run_sweep(*sweep, f);
    }
    emit(f, text);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ns::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
