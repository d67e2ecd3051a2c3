#include <gtest/gtest.h>

#include <numeric>

#include "qfano/rr.hpp"

using namespace qfano;

TEST(RR, OrbifoldContribution) {
  EXPECT_EQ(c_orbifold(5, 2, 0), Rational(0));
  EXPECT_EQ(c_orbifold(5, 2, 1), Rational(-2, 5));
  EXPECT_EQ(c_orbifold(5, 2, 6), c_orbifold(5, 2, 1));
  EXPECT_THROW(c_orbifold(4, 2, 1), InvalidInput);
}

TEST(RR, OrbifoldPeriodicity) {
  for (long r = 2; r <= 24; ++r)
    for (long b = 1; 2 * b <= r; ++b) {
      if (std::gcd(b, r) != 1) continue;
      for (long i = 0; i <= 3 * r; ++i) EXPECT_EQ(c_orbifold(r, b, i + r), c_orbifold(r, b, i)) << r << "," << b;
    }
}

TEST(RR, CurveContribution) {
  EXPECT_EQ(c_curve(2, 1, 1), Rational(-1, 4));
  EXPECT_EQ(c_curve(3, 1, 1), Rational(-1, 3));
  EXPECT_EQ(c_curve(4, 1, 2), Rational(-1, 2));
}

TEST(RR, H0Trivial) {
  CurveConfig cfg;
  EXPECT_EQ(h0_sA(5, Rational(2), cfg, Basket{}, {}, 1), Rational(3));
  EXPECT_THROW(h0_sA(5, Rational(2), cfg, Basket{}, {}, 5), InvalidInput);
}

// Second difference in s of h0 with frozen residue data equals -A^2 K
// once the periodic parts realign, i.e. steps of the full period.
TEST(RR, H0QuadraticPart) {
  Basket b(std::vector<OrbifoldPoint>{OrbifoldPoint::make(3, 1), OrbifoldPoint::make(5, 2)});
  CurveConfig cfg;
  cfg.curves.push_back({4, 3, 1});
  cfg.x_A1 = 2;
  Rational a2mk(7, 60);
  long P = 60;
  LocalIndexAssignment idx{1, 2};
  for (long s = 1; s + 2 * P < 400; ++s) {
    auto d2 = h0_sA(400, a2mk, cfg, b, idx, s + 2 * P) - 2 * h0_sA(400, a2mk, cfg, b, idx, s + P) +
              h0_sA(400, a2mk, cfg, b, idx, s);
    EXPECT_EQ(d2, a2mk * Rational(P * P));
  }
}

TEST(RR, KMBound) {
  EXPECT_EQ(km_bound(1, 3, 10, 20), Rational(3));
  EXPECT_EQ(km_bound(2, 1, 10, 20), Rational(16, 5));
  EXPECT_EQ(km_bound(3, 1, 57, 67), Rational(17956, 5429));
  EXPECT_EQ(km_bound(2, 2, 10, 20), Rational(4 * 400, 10 * (80 - 30)));
  EXPECT_THROW(km_bound(1, 1, 10, 20), InvalidInput);
}

TEST(RR, KMDenominatorPositive) {
  for (long q = 2; q <= 200; ++q)
    for (long p = q / 2 + 1; p < q; ++p) EXPECT_GT(-4 * p * p + 6 * p * q - q * q, 0) << p << "," << q;
}

TEST(RR, Nabla) {
  EXPECT_EQ(nabla(84, 84, 96), Rational(6259, 84));
  EXPECT_EQ(nabla(82, 3362, 928), Rational(135, 2));
  EXPECT_EQ(nabla(70, 490, 218), Rational(921, 10));
  for (long c = 100; c < 110; ++c) {
    EXPECT_GT(nabla(70, c, 300), nabla(70, c + 1, 300));
    EXPECT_LT(nabla(70, c, 300), nabla(70, c, 301));
  }
}

TEST(RR, DeltaLowerBound) {
  CurveConfig c3;
  c3.curves.push_back({5, 33, std::nullopt});
  c3.x_A1 = 33;
  EXPECT_EQ(delta_lower_bound(c3), Rational(2079, 10));
  EXPECT_EQ(delta_lower_bound(CurveConfig{}), Rational(0));
  CurveConfig a1;
  a1.x_A1 = 2;
  EXPECT_EQ(delta_lower_bound(a1), Rational(3));
  a1.x_A1.reset();
  EXPECT_THROW(delta_lower_bound(a1), InvalidInput);
}

TEST(RR, BuilderEmptyBasket) {
  RRData d;
  d.q = 10;
  d.rXc13 = 100;
  auto built = residue_term_builder(1, 1, d);
  EXPECT_TRUE(built.system.unknown_terms.empty());
  EXPECT_TRUE(built.system.fixed_terms.empty());
}

TEST(RR, BuilderCase1) {
  RRData d;
  d.basket = Basket(std::vector<OrbifoldPoint>{OrbifoldPoint::make(5, 1)});
  d.q = 84;
  d.rXc13 = 84;
  d.cfg.curves = {{3, 5, std::nullopt}, {4, 5, std::nullopt}, {7, 5, std::nullopt}};
  d.cfg.x_A1.reset();
  d.cfg.a1_allowed = true;
  auto built = residue_term_builder(10, 2, d);
  EXPECT_EQ(built.system.constant, Rational(1, 21));
  EXPECT_EQ(built.system.unknown_terms.size(), 3u);
  EXPECT_EQ(built.system.domain_size(), 84);
}

TEST(RR, BuilderCase20) {
  RRData d;
  std::vector<OrbifoldPoint> pts;
  for (auto [r, b] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {5, 1}, {6, 1}})
    pts.push_back(OrbifoldPoint::make(r, b));
  d.basket = Basket(pts);
  d.q = 72;
  d.rXc13 = 864;
  d.cfg.curves_divide = 6;
  d.cfg.x_A1.reset();
  auto built = residue_term_builder(1, 6, d);
  // -36/2 A^2 K = 18 * 864 / (30 * 72^2)
  EXPECT_EQ(built.system.fixed_total(), Rational(18 * 864, 30 * 72 * 72));
  std::vector<long> moduli;
  for (const auto& t : built.system.unknown_terms) moduli.push_back(t.modulus);
  EXPECT_EQ(moduli, (std::vector<long>{2, 3, 5, 6}));
}
