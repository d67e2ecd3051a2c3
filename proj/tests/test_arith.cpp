#include <gtest/gtest.h>

#include "qfano/arith.hpp"

using namespace qfano;

TEST(Rational, LowestTermsAndSign) {
  Rational x(6, -4);
  EXPECT_EQ(x.num(), -3);
  EXPECT_EQ(x.den(), 2);
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational(1, 0), InvalidInput);
  EXPECT_THROW(Rational(1) / Rational(0), InvalidInput);
  EXPECT_THROW(Rational::parse("1/x"), InvalidInput);
}

TEST(Rational, FloorCeilFrac) {
  Rational x(-7, 3);
  EXPECT_EQ(x.floor(), -3);
  EXPECT_EQ(x.ceil(), -2);
  EXPECT_EQ(x.frac(), Rational(2, 3));
}

TEST(Rational, BeyondMachineWords) {
  Rational big(Integer("123456789012345678901234567890"));
  Rational sq = big * big;
  EXPECT_EQ(sq / big, big);
  EXPECT_GT(sq, big);
}

TEST(Residue, Examples) {
  EXPECT_EQ(residue(-5, 3), 1);
  EXPECT_EQ(residue(7, 7), 0);
  EXPECT_EQ(residue(22, 11), 0);
  EXPECT_THROW(residue(3, 0), InvalidInput);
}

TEST(Residue, Idempotent) {
  for (long r = 1; r <= 30; ++r)
    for (long a = -100; a <= 100; ++a) {
      long x = residue(a, r);
      EXPECT_EQ(residue(x, r), x);
      EXPECT_EQ((a - x) % r, 0);
    }
}

TEST(SigmaPair, Examples) {
  EXPECT_EQ(sigma_pair(0, 7), Rational(0));
  EXPECT_EQ(sigma_pair(2, 5), Rational(3, 5));
  EXPECT_EQ(sigma_pair(2, 11), Rational(9, 11));
}

TEST(SigmaPair, EvenPeriodicAndZeroSet) {
  for (long r = 1; r <= 50; ++r)
    for (long x = -3 * r; x <= 3 * r; ++x) {
      auto v = sigma_pair(x, r);
      EXPECT_EQ(v, sigma_pair(-x, r));
      EXPECT_EQ(v, sigma_pair(x + r, r));
      EXPECT_GE(v, Rational(0));
      EXPECT_EQ(v.is_zero(), x % r == 0);
    }
}

TEST(SigmaPair, SumOverPeriod) {
  for (long r = 1; r <= 50; ++r) {
    Rational s;
    for (long x = 0; x < r; ++x) s += sigma_pair(x, r);
    EXPECT_EQ(s, Rational(r * r - 1, 12)) << "r = " << r;
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(p_adic_valuation(Rational(28), 2), 2);
  EXPECT_EQ(p_adic_valuation(Rational(1, 6), 3), -1);
  EXPECT_FALSE(p_adic_valuation(Rational(0), 5).has_value());
  EXPECT_THROW(p_adic_valuation(Rational(12), 4), InvalidInput);
}

TEST(Indicator, Examples) {
  EXPECT_EQ(indicator(true), 1);
  EXPECT_EQ(indicator(false), 0);
  long p = 3, n = 1;
  EXPECT_EQ(indicator((n + 2) % p == 0), 1);
}

TEST(Factoring, PrimePowersAndDivisors) {
  EXPECT_EQ(prime_power_factors(12), (std::vector<long>{3, 4}));
  EXPECT_EQ(prime_power_factors(84), (std::vector<long>{3, 4, 7}));
  EXPECT_TRUE(prime_power_factors(1).empty());
  EXPECT_EQ(divisors(12), (std::vector<long>{1, 2, 3, 4, 6, 12}));
}

TEST(Display, CeilingHundredthsTrimmed) {
  EXPECT_EQ(display_hundredths(Rational(6259, 84)), "74.52");
  EXPECT_EQ(display_hundredths(Rational(135, 2)), "67.5");
  EXPECT_EQ(display_hundredths(Rational(921, 10)), "92.1");
  EXPECT_EQ(display_hundredths(Rational(3)), "3");
}
