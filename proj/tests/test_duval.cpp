#include <gtest/gtest.h>

#include <numeric>

#include "qfano/duval.hpp"

using namespace qfano;

namespace {

std::vector<DuValType> all_types(int max_rank) {
  std::vector<DuValType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(DuValType::A(n));
  for (int m = 4; m <= max_rank; ++m) out.push_back(DuValType::D(m));
  for (int n = 6; n <= 8; ++n) out.push_back(DuValType::E(n));
  return out;
}

Integer order(const std::vector<Integer>& factors) {
  Integer o = 1;
  for (const auto& f : factors) o *= f;
  return o;
}

}  // namespace

TEST(DuVal, InvariantTable) {
  EXPECT_EQ(invariants(DuValType::parse("A10")), (DuValInvariants{11, 11, 11, 11}));
  EXPECT_EQ(invariants(DuValType::parse("D5")), (DuValInvariants{6, 5, 12, 4}));
  EXPECT_EQ(invariants(DuValType::parse("E7")), (DuValInvariants{8, 7, 48, 2}));
  EXPECT_THROW(DuValType::parse("D3"), InvalidInput);
  EXPECT_THROW(DuValType::parse("E9"), InvalidInput);
  EXPECT_THROW(DuValType::parse("X1"), InvalidInput);
}

TEST(DuVal, CartanMatrices) {
  EXPECT_EQ(cartan_matrix(DuValType::A(1)), (IntMatrix{{-2}}));
  EXPECT_EQ(cartan_matrix(DuValType::A(2)), (IntMatrix{{-2, 1}, {1, -2}}));
  auto d4 = cartan_matrix(DuValType::D(4));
  int central = 0;
  for (const auto& row : d4) {
    int deg = 0;
    for (long v : row) deg += v == 1;
    central = std::max(central, deg);
  }
  EXPECT_EQ(central, 3);
  for (const auto& t : all_types(24)) {
    auto m = cartan_matrix(t);
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t k = 0; k < m.size(); ++k) EXPECT_EQ(m[i][k], m[k][i]);
  }
}

TEST(DuVal, ClassGroupExamples) {
  EXPECT_EQ(class_group(DuValType::A(3)), (std::vector<Integer>{4}));
  EXPECT_EQ(class_group(DuValType::D(4)), (std::vector<Integer>{2, 2}));
  EXPECT_TRUE(class_group(DuValType::E(8)).empty());
}

TEST(DuVal, ClassGroupOrderIsJ) {
  for (const auto& t : all_types(24)) {
    auto o = order(class_group(t));
    EXPECT_EQ(o, invariants(t).j) << t.name();
    EXPECT_EQ(abs(determinant(cartan_matrix(t))), o) << t.name();
    EXPECT_EQ(static_cast<long>(class_representatives(t).size()), invariants(t).j) << t.name();
  }
  for (int n = 1; n <= 24; ++n) EXPECT_EQ(determinant(cartan_matrix(DuValType::A(n))), (n % 2 ? -1 : 1) * (n + 1));
}

TEST(DuVal, MultiplicityExamples) {
  auto a3 = DuValType::A(3);
  WeilClass gen{{1, 0, 0}};
  WeilClass twice{{2, 0, 0}};
  EXPECT_FALSE(has_integral_multiplicity(a3, gen));
  EXPECT_TRUE(has_integral_multiplicity(a3, twice));
  for (const auto& c : class_representatives(DuValType::E(6)))
    if (!std::all_of(c.pairing.begin(), c.pairing.end(), [](long v) { return v == 0; }))
      EXPECT_TRUE(has_integral_multiplicity(DuValType::E(6), c));
}

// A_n: class k (pairing k on an end curve) has an integral multiplicity
// iff gcd(k, n+1) > 1. D and E: every nonzero class does.
TEST(DuVal, ModifiabilityDichotomy) {
  for (int n = 1; n <= 24; ++n) {
    auto t = DuValType::A(n);
    for (long k = 1; k <= n; ++k) {
      WeilClass c{std::vector<long>(n, 0)};
      c.pairing[0] = k;
      EXPECT_EQ(has_integral_multiplicity(t, c), std::gcd(k, n + 1L) > 1) << t.name() << " k=" << k;
    }
  }
  for (const auto& t : all_types(24)) {
    if (t.kind == DuValKind::A) continue;
    auto reps = class_representatives(t);
    ASSERT_EQ(static_cast<long>(reps.size()), invariants(t).j);
    for (size_t i = 1; i < reps.size(); ++i) EXPECT_TRUE(has_integral_multiplicity(t, reps[i])) << t.name();
  }
}
