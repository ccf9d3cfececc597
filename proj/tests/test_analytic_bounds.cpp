#include "noisy_search/analytic_bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace ns = noisy_search;

namespace {

double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

ns::SearchParams P(ns::Index n, double eps) { return ns::SearchParams(n, eps); }

}  // namespace

TEST(Lemma1, Values) {
  EXPECT_DOUBLE_EQ(ns::lemma1_bound(P(1024, 0.1)), 102.4);
  EXPECT_DOUBLE_EQ(ns::lemma1_bound(P(256, 0.25)), 64.0);
  EXPECT_EQ(ns::lemma1_bound(P(77, 0.0)), 0.0);
}

TEST(Lemma2, Values) {
  EXPECT_NEAR(ns::lemma2_value(P(1024, 0.1)), 61.44 / 1.1, 1e-12);
  EXPECT_NEAR(ns::lemma2_value(P(1024, 0.1)), 55.854545454545, 1e-10);
  EXPECT_NEAR(ns::lemma2_value(P(4, 0.1)), 0.24 / 1.1, 1e-15);
  EXPECT_EQ(ns::lemma2_value(P(77, 0.0)), 0.0);
}

TEST(ARecurrence, Values) {
  EXPECT_DOUBLE_EQ(ns::a_recurrence(P(2, 0.25)), 0.25);
  EXPECT_NEAR(ns::a_recurrence(P(8, 0.1)), 0.7, 1e-15);
  EXPECT_EQ(ns::a_recurrence(P(1, 0.6)), 0.0);
}

TEST(BRecurrence, Values) {
  EXPECT_NEAR(ns::b_recurrence(P(2, 0.1)), 0.06, 1e-15);
  EXPECT_NEAR(ns::b_recurrence(P(4, 0.1)), 0.174, 1e-15);
  EXPECT_EQ(ns::b_recurrence(P(1, 0.6)), 0.0);
  for (ns::Index n = 1; n <= (1U << 20); n *= 2) EXPECT_EQ(ns::b_recurrence(P(n, 0.0)), 0.0);
}

TEST(Recurrences, RejectNonPowerOfTwo) {
  EXPECT_THROW(ns::a_recurrence(P(100, 0.1)), std::domain_error);
  EXPECT_THROW(ns::b_recurrence(P(3, 0.1)), std::domain_error);
}

TEST(Recurrences, TelescopesToEpsTimesNMinusOne) {
  for (ns::Index n = 1; n <= (1U << 20); n *= 2) {
    for (int k = 0; k <= 20; ++k) {
      const double eps = 0.05 * k;
      const double want = eps * double(n - 1);
      EXPECT_LE(rel_err(ns::a_recurrence(P(n, eps)), want), 1e-12) << n << " " << eps;
    }
  }
}

TEST(Recurrences, BIsTruncatedGeometricSeries) {
  for (int log_n = 0; log_n <= 20; ++log_n) {
    const ns::Index n = ns::Index{1} << log_n;
    for (int k = 1; k <= 20; ++k) {
      const double eps = 0.05 * k;
      const double truncation = 1.0 - std::pow((1.0 - eps) / 2.0, log_n);
      const double want = ns::lemma2_value(P(n, eps)) * truncation;
      EXPECT_LE(rel_err(ns::b_recurrence(P(n, eps)), want), 1e-12) << n << " " << eps;
    }
  }
}

TEST(Recurrences, BApproachesClosedForm) {
  const double gap = 1.0 - ns::b_recurrence(P(1024, 0.1)) / ns::lemma2_value(P(1024, 0.1));
  EXPECT_NEAR(gap, std::pow(0.45, 10), 1e-12);
  EXPECT_LT(gap, 1e-3);
}

TEST(BoundReport, InvariantsOnGrid) {
  for (ns::Index n : {1, 2, 3, 16, 100, 1024, 65536}) {
    ns::BoundReport prev = ns::evaluate_bounds(P(n, 0.0));
    EXPECT_EQ(prev.lemma1, 0.0);
    EXPECT_EQ(prev.lemma2, 0.0);
    EXPECT_EQ(prev.a_rec.has_value(), ns::is_power_of_two(n));
    if (prev.a_rec) {
      EXPECT_EQ(*prev.a_rec, 0.0);
      EXPECT_EQ(*prev.b_rec, 0.0);
    }
    for (int k = 1; k <= 20; ++k) {
      const double eps = 0.05 * k;
      const ns::BoundReport r = ns::evaluate_bounds(P(n, eps));
      EXPECT_GE(r.lemma2, 0.0);
      EXPECT_GE(r.lemma1, prev.lemma1);
      EXPECT_GE(r.lemma2, prev.lemma2);
      if (eps <= 0.5) EXPECT_GE(r.lemma1, r.lemma2);
      if (r.a_rec) {
        EXPECT_LE(*r.a_rec, r.lemma1);
        EXPECT_LE(*r.b_rec, r.lemma2);
        EXPECT_GE(*r.a_rec, *prev.a_rec);
        EXPECT_GE(*r.b_rec, *prev.b_rec);
      }
      prev = r;
    }
  }
}
