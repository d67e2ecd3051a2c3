#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "qfano/arith.hpp"

namespace qfano {

struct OrbifoldPoint {
  long r;
  long b;

  // Checks 0 < b <= r/2, gcd(b, r) = 1, r >= 2.
  static OrbifoldPoint make(long r, long b);
  friend auto operator<=>(const OrbifoldPoint&, const OrbifoldPoint&) = default;
};

// Sorted multiset of integers >= 2.
using Multiset = std::vector<long>;

class Basket {
 public:
  Basket() = default;
  explicit Basket(std::vector<OrbifoldPoint> points);

  const std::vector<OrbifoldPoint>& points() const { return points_; }
  size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  Multiset R() const;

  // "{2x(2,1),(9,4)}"
  std::string str() const;

  friend auto operator<=>(const Basket&, const Basket&) = default;

 private:
  std::vector<OrbifoldPoint> points_;
};

long gorenstein_index(const Basket& B);
long lcm_of(const Multiset& R);

// Sum of (r - 1/r).
Rational basket_budget(const Multiset& R);
bool admissible(const Multiset& R);

// r_X (24 - sum (r - 1/r)); throws for a non-admissible R.
Rational rX_c2c1(const Multiset& R);

long n_count(const Multiset& R, long p, long e);

// All admissible R in lexicographic order of their sorted vectors.
std::vector<Multiset> enumerate_R();
void for_each_R(const std::function<void(const Multiset&)>& visit);

std::vector<Basket> enumerate_baskets(const Multiset& R);

bool rr_fano_integral(const Basket& B, const Rational& c1cubed);

}  // namespace qfano
