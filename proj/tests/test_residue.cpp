#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qfano/residue.hpp"

using namespace qfano;

namespace {

// Value of one term computed from the defining formula, not UnknownTerm::value.
Rational term_value(const UnknownTerm& t, long u) {
  long m = t.modulus;
  if (t.shape == TermShape::Quadratic) return t.coeff * Rational(u * (m - u), 2 * m);
  return t.coeff * Rational(u, m);
}

Rational total(const ResidueConstraintSystem& s, const std::vector<long>& a) {
  Rational v = s.constant;
  for (const auto& f : s.fixed_terms) v += f.value;
  for (size_t i = 0; i < a.size(); ++i) v += term_value(s.unknown_terms[i], a[i]);
  return v;
}

// Depth-first over the unknowns from the last to the first, carrying
// partial sums; collects every solution, or stops at the first one.
void dfs(const std::vector<std::vector<Rational>>& table, size_t level, const Rational& partial,
         std::vector<long>& a, std::set<std::vector<long>>& out, bool first_only) {
  if (first_only && !out.empty()) return;
  if (level == 0) {
    if (partial.is_integer()) out.insert(a);
    return;
  }
  for (size_t u = 0; u < table[level - 1].size(); ++u) {
    a[level - 1] = static_cast<long>(u);
    dfs(table, level - 1, partial + table[level - 1][u], a, out, first_only);
  }
}

std::set<std::vector<long>> oracle(const ResidueConstraintSystem& s, bool first_only = false) {
  std::vector<std::vector<Rational>> table;
  for (const auto& t : s.unknown_terms) {
    table.emplace_back();
    for (long u = 0; u < t.modulus; ++u) table.back().push_back(term_value(t, u));
  }
  Rational base = s.constant;
  for (const auto& f : s.fixed_terms) base += f.value;
  std::set<std::vector<long>> out;
  std::vector<long> a(table.size(), 0);
  dfs(table, table.size(), base, a, out, first_only);
  return out;
}

ResidueConstraintSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> nterms(0, 5), mod(2, 24), num(-40, 40), den(1, 30), shape(0, 3);
  ResidueConstraintSystem s;
  s.constant = Rational(num(rng), den(rng));
  if (shape(rng) == 0) s.fixed_terms.push_back({Rational(num(rng), den(rng)), "f"});
  long domain = 1;
  long n = nterms(rng);
  for (long k = 0; k < n; ++k) {
    long m = mod(rng);
    if (domain * m > 100000) break;
    domain *= m;
    long c = num(rng);
    if (c == 0) c = 1;
    s.unknown_terms.push_back({Rational(c, shape(rng) == 0 ? den(rng) : 1), m,
                               shape(rng) == 0 ? TermShape::Linear : TermShape::Quadratic,
                               "u" + std::to_string(k)});
  }
  return s;
}

}  // namespace

TEST(Residue, Case1System) {
  ResidueConstraintSystem s;
  s.constant = Rational(1, 21);
  for (long m : {3, 4, 7}) s.unknown_terms.push_back({Rational(-10), m, TermShape::Quadratic, "C"});
  auto r = exists_integral_solution(s);
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.domain_size, 84);
}

TEST(Residue, ConstantOnly) {
  ResidueConstraintSystem s;
  auto r = exists_integral_solution(s);
  EXPECT_TRUE(r.solvable);
  EXPECT_TRUE(r.witness.empty());
  s.constant = Rational(1, 2);
  EXPECT_FALSE(exists_integral_solution(s).solvable);
}

TEST(Residue, Case20System) {
  ResidueConstraintSystem s;
  s.constant = Rational(1, 10);
  for (long m : {2, 3, 5, 6}) s.unknown_terms.push_back({Rational(-1), m, TermShape::Quadratic, "Q"});
  EXPECT_FALSE(exists_integral_solution(s).solvable);
  EXPECT_FALSE(enumerate_directly(s).solvable);
}

TEST(Residue, DomainCap) {
  ResidueConstraintSystem s;
  for (int k = 0; k < 8; ++k) s.unknown_terms.push_back({Rational(1), 24, TermShape::Linear, "x"});
  EXPECT_THROW(exists_integral_solution(s, Integer(1000)), DomainTooLarge);
}

TEST(Residue, Substitute) {
  ResidueConstraintSystem s;
  s.unknown_terms.push_back({Rational(3), 4, TermShape::Quadratic, "x"});
  s.unknown_terms.push_back({Rational(1), 5, TermShape::Linear, "y"});
  auto t = s.substitute("x", 6);
  ASSERT_EQ(t.unknown_terms.size(), 1u);
  EXPECT_EQ(t.fixed_total(), Rational(3) * Rational(2 * 2, 8));
}

TEST(Residue, OracleEquivalence) {
  std::mt19937_64 rng(66);
  int solvable = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto s = random_system(rng);
    // Full solution sets only for small domains; existence for all.
    bool small = s.domain_size() <= 5000;
    auto expected = oracle(s, !small);
    auto r = exists_integral_solution(s);
    ASSERT_EQ(r.solvable, !expected.empty()) << s.str();
    EXPECT_EQ(r.domain_size, s.domain_size());
    if (r.solvable) {
      ++solvable;
      EXPECT_TRUE(total(s, r.witness).is_integer()) << s.str();
    }
    EXPECT_EQ(enumerate_directly(s).solvable, r.solvable);
    if (!small) continue;
    auto all = all_integral_solutions(s);
    EXPECT_EQ(std::set<std::vector<long>>(all.begin(), all.end()), expected);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
  EXPECT_GT(solvable, 50);
  EXPECT_LT(solvable, 950);
}
