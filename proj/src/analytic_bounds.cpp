#include "noisy_search/analytic_bounds.hpp"

#include <stdexcept>
#include <string>

namespace noisy_search {

namespace {

void require_power_of_two(Index n) {
  if (!is_power_of_two(n)) {
    throw std::domain_error("recurrence needs a power-of-two table size, got " +
                            std::to_string(n));
  }
}

}  // namespace

double lemma1_bound(const SearchParams& params) noexcept {
  return params.epsilon() * static_cast<double>(params.n());
}

double lemma2_value(const SearchParams& params) noexcept {
  const double eps = params.epsilon();
  return eps * static_cast<double>(params.n()) * (0.5 + eps) / (1.0 + eps);
}

double a_recurrence(const SearchParams& params) {
  require_power_of_two(params.n());
  const double eps = params.epsilon();
  double a = 0.0;
  for (Index m = 2; m <= params.n(); m *= 2) {
    a += eps * static_cast<double>(m / 2);
  }
  return a;
}

double b_recurrence(const SearchParams& params) {
  require_power_of_two(params.n());
  const double eps = params.epsilon();
  double b = 0.0;
  for (Index m = 2; m <= params.n(); m *= 2) {
    const auto size = static_cast<double>(m);
    b = eps * (size / 4.0 + eps * size / 2.0) + (1.0 - eps) * b;
  }
  return b;
}

BoundReport evaluate_bounds(const SearchParams& params) {
  BoundReport report;
  report.n = params.n();
  report.epsilon = params.epsilon();
  report.lemma1 = lemma1_bound(params);
  report.lemma2 = lemma2_value(params);
  if (is_power_of_two(params.n())) {
    report.a_rec = a_recurrence(params);
    report.b_rec = b_recurrence(params);
  }
  return report;
}

}  // namespace noisy_search
