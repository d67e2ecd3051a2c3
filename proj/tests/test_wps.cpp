#include <gtest/gtest.h>

#include "qfano/wps.hpp"

using namespace qfano;

TEST(WPS, Examples) {
  auto P = WeightedP3::make(5, 6, 22, 33);
  EXPECT_TRUE(P.well_formed());
  EXPECT_EQ(h0(P, 22), 2);
  EXPECT_EQ(h0(P, 0), 1);
  EXPECT_EQ(h0(P, 1), 0);
  EXPECT_EQ(anticanonical_degree(P), 66);
  EXPECT_EQ(anticanonical_degree(WeightedP3::make(3, 5, 11, 19)), 38);
  EXPECT_EQ(anticanonical_degree(WeightedP3::make(5, 8, 9, 11)), 33);
  EXPECT_EQ(anticanonical_volume(P), Rational(66, 5));
  EXPECT_EQ(anticanonical_volume(WeightedP3::make(1, 1, 1, 1)), Rational(64));
  EXPECT_EQ(anticanonical_volume(WeightedP3::make(1, 1, 1, 2)), Rational(125, 2));
  EXPECT_FALSE(WeightedP3::make(2, 2, 2, 3).well_formed());
  EXPECT_THROW(WeightedP3::make(0, 1, 1, 1), InvalidInput);
}

// Coefficients of prod 1/(1 - t^w) by repeated polynomial multiplication
// with the truncated geometric series.
TEST(WPS, GeneratingFunction) {
  for (auto w : std::vector<std::array<long, 4>>{{5, 6, 22, 33}, {1, 1, 1, 1}, {1, 2, 3, 5}, {2, 3, 7, 11}, {4, 6, 9, 10}}) {
    const long D = 200;
    std::vector<long> poly(D + 1, 0);
    poly[0] = 1;
    for (long wi : w) {
      std::vector<long> next(D + 1, 0);
      for (long a = 0; a <= D; ++a)
        for (long k = 0; a + k * wi <= D; ++k) next[a + k * wi] += poly[a];
      poly = next;
    }
    auto P = WeightedP3::make(w[0], w[1], w[2], w[3]);
    auto series = h0_series(P, D);
    for (long s = 0; s <= D; ++s) {
      EXPECT_EQ(series[s], poly[s]) << s;
      EXPECT_EQ(h0(P, s), poly[s]) << s;
    }
    for (long s = 0; s + 33 <= D; ++s)
      for (long wi : w) EXPECT_GE(series[s + wi], series[s]);
  }
}
