#include "noisy_search/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace ns = noisy_search;

TEST(Rng, SubstreamSeedIsSplitMix64Output) {
  // Published SplitMix64 outputs for state 0.
  EXPECT_EQ(ns::substream_seed(0, 0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(ns::substream_seed(0, 1), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(ns::substream_seed(0, 2), 0x06C45D188009454FULL);
}

TEST(Rng, SameSeedSameStream) {
  ns::Rng a(12345);
  ns::Rng b(12345);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a(), b());
  ns::Rng c(12346);
  EXPECT_NE(ns::Rng(12345)(), c());
}

TEST(Rng, Uniform01InUnitInterval) {
  ns::Rng rng(7);
  double sum = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = ns::uniform01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // Mean of U(0,1) has sd sqrt(1/12 / N).
  EXPECT_NEAR(sum / kDraws, 0.5, 5.0 * std::sqrt(1.0 / 12.0 / kDraws));
}

TEST(Rng, UniformBelowCoversRangeEvenly) {
  ns::Rng rng(99);
  constexpr std::uint64_t kBound = 7;
  constexpr int kDraws = 700000;
  std::vector<int> counts(kBound, 0);
  for (int i = 0; i < kDraws; ++i) {
    const auto x = ns::uniform_below(rng, kBound);
    ASSERT_LT(x, kBound);
    ++counts[x];
  }
  double chi2 = 0.0;
  const double expected = double(kDraws) / kBound;
  for (const int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 6 degrees of freedom; 99.9th percentile is about 22.5.
  EXPECT_LT(chi2, 22.5);
}

TEST(Rng, UniformBelowOneIsZero) {
  ns::Rng rng(1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(ns::uniform_below(rng, 1), 0U);
}
