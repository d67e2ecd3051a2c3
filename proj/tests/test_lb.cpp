#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "qfano/basket.hpp"
#include "qfano/lb.hpp"
#include "support.hpp"

using namespace qfano;

TEST(LB, Examples) {
  EXPECT_EQ(f_p(LBContext({5}), 5, 3), 5);
  EXPECT_EQ(f_p(LBContext({2, 4, 4, 7}), 2, 3), 2);
  EXPECT_EQ(f_p(LBContext({3, 3}), 7, 5), 1);
  EXPECT_EQ(lb(LBContext({3, 3}), 5), 3);
  EXPECT_EQ(lb(LBContext({5}), 7), 5);
  EXPECT_EQ(lb(LBContext({2, 4, 4, 7}), 3), 14);
  EXPECT_THROW(f_p(LBContext({5}), 29, 3), InvalidInput);
}

TEST(LB, TableColumns) {
  for (const char* name : {"candidates_q_gt_66.txt", "candidates_q_eq_66.txt"})
    for (const auto& row : fixtures::load_table(name)) {
      LBContext ctx(row.basket.R());
      ASSERT_EQ(row.prime_powers.size(), row.lb.size());
      for (size_t i = 0; i < row.lb.size(); ++i)
        EXPECT_EQ(lb(ctx, row.prime_powers[i]), row.lb[i]) << name << " row " << row.id << " N=" << row.prime_powers[i];
    }
}

TEST(LB, DivisibilityProperties) {
  auto all = enumerate_R();
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    LBContext ctx(all[pick(rng)]);
    EXPECT_EQ(lb(ctx, 2), 1);
    std::vector<long> v(25);
    for (long N = 2; N <= 24; ++N) {
      v[N] = lb(ctx, N);
      EXPECT_EQ(ctx.rX() % v[N], 0);
    }
    for (long N = 2; N <= 24; ++N)
      for (long M = N; M <= 24; ++M) EXPECT_EQ(v[M] % v[N], 0) << "N=" << N << " M=" << M;
  }
}

TEST(LB, CoprimeSquarefree) {
  int checked = 0;
  for (const auto& R : enumerate_R()) {
    bool ok = !R.empty();
    for (size_t i = 0; i < R.size() && ok; ++i) {
      for (long p = 2; p * p <= R[i]; ++p)
        if (R[i] % (p * p) == 0) ok = false;
      for (size_t k = i + 1; k < R.size(); ++k)
        if (std::gcd(R[i], R[k]) != 1) ok = false;
    }
    if (!ok) continue;
    LBContext ctx(R);
    EXPECT_EQ(lb(ctx, 4), ctx.rX());
    if (ctx.rX() % 3 != 0) EXPECT_EQ(lb(ctx, 3), ctx.rX());
    ++checked;
  }
  EXPECT_GT(checked, 50);
}
