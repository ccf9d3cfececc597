#pragma once

#include <optional>

#include "noisy_search/search_model.hpp"

namespace noisy_search {

/// Closed forms and finite recurrences for the expected search error.
/// Recurrence fields are empty when n is not a power of two.
struct BoundReport {
  Index n = 1;
  double epsilon = 0.0;
  double lemma1 = 0.0;
  double lemma2 = 0.0;
  std::optional<double> a_rec;
  std::optional<double> b_rec;
};

/// Upper bound on the expected error of a single target: epsilon * n.
double lemma1_bound(const SearchParams& params) noexcept;

/// Average expected error over targets: epsilon * n * (0.5 + epsilon) / (1 + epsilon).
double lemma2_value(const SearchParams& params) noexcept;

/// a(1) = 0, a(m) = a(m/2) + epsilon * m/2, evaluated bottom-up.
/// Throws std::domain_error when n is not a power of two.
double a_recurrence(const SearchParams& params);

/// b(1) = 0, b(m) = epsilon * (m/4 + epsilon * m/2) + (1 - epsilon) * b(m/2).
/// Throws std::domain_error when n is not a power of two.
double b_recurrence(const SearchParams& params);

BoundReport evaluate_bounds(const SearchParams& params);

}  // namespace noisy_search
