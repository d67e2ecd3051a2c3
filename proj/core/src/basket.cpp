#include "qfano/basket.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qfano {

OrbifoldPoint OrbifoldPoint::make(long r, long b) {
  if (r < 2 || b < 1 || 2 * b > r || gcd(b, r) != 1)
    throw InvalidInput("invalid orbifold point (" + std::to_string(r) + "," + std::to_string(b) + ")");
  return {r, b};
}

Basket::Basket(std::vector<OrbifoldPoint> points) : points_(std::move(points)) {
  for (const auto& p : points_) OrbifoldPoint::make(p.r, p.b);
  std::sort(points_.begin(), points_.end());
}

Multiset Basket::R() const {
  Multiset out;
  for (const auto& p : points_) out.push_back(p.r);
  return out;
}

std::string Basket::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < points_.size();) {
    size_t j = i;
    while (j < points_.size() && points_[j] == points_[i]) ++j;
    if (i > 0) os << ',';
    if (j - i > 1) os << (j - i) << 'x';
    os << '(' << points_[i].r << ',' << points_[i].b << ')';
    i = j;
  }
  os << '}';
  return os.str();
}

long lcm_of(const Multiset& R) {
  long l = 1;
  for (long r : R) l = lcm(l, r);
  return l;
}

long gorenstein_index(const Basket& B) { return lcm_of(B.R()); }

Rational basket_budget(const Multiset& R) {
  Rational s;
  for (long r : R) s += Rational(r) - Rational(1, r);
  return s;
}

bool admissible(const Multiset& R) {
  for (long r : R)
    if (r < 2) return false;
  return basket_budget(R) < Rational(24);
}

Rational rX_c2c1(const Multiset& R) {
  if (!admissible(R)) throw InvalidInput("non-admissible multiset");
  return Rational(lcm_of(R)) * (Rational(24) - basket_budget(R));
}

long n_count(const Multiset& R, long p, long e) {
  long n = 0;
  for (long r : R)
    if (p_adic_valuation(r, p) == e) ++n;
  return n;
}

namespace {

// Depth-first over nondecreasing sequences; emitting the prefix before its
// extensions yields lexicographic order. Budget kept as an exact rational.
void walk(Multiset& cur, long lo, const Rational& used,
          const std::function<void(const Multiset&)>& visit) {
  visit(cur);
  for (long r = lo; r <= 24; ++r) {
    Rational next = used + Rational(r) - Rational(1, r);
    if (next >= Rational(24)) break;  // r - 1/r is increasing in r
    cur.push_back(r);
    walk(cur, r, next, visit);
    cur.pop_back();
  }
}

// Multisets of size k drawn from the sorted list `options`, as index
// sequences i_1 <= ... <= i_k.
void multichoose(const std::vector<long>& options, size_t k, size_t start, std::vector<long>& cur,
                 std::vector<std::vector<long>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < options.size(); ++i) {
    cur.push_back(options[i]);
    multichoose(options, k, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

void for_each_R(const std::function<void(const Multiset&)>& visit) {
  Multiset cur;
  walk(cur, 2, Rational(0), visit);
}

std::vector<Multiset> enumerate_R() {
  std::vector<Multiset> out;
  for_each_R([&out](const Multiset& R) { out.push_back(R); });
  return out;
}

std::vector<Basket> enumerate_baskets(const Multiset& R) {
  std::map<long, size_t> mult;
  for (long r : R) ++mult[r];

  std::vector<std::vector<std::vector<OrbifoldPoint>>> per_r;
  for (const auto& [r, k] : mult) {
    std::vector<long> bs;
    for (long b = 1; 2 * b <= r; ++b)
      if (gcd(b, r) == 1) bs.push_back(b);
    std::vector<std::vector<long>> choices;
    std::vector<long> cur;
    multichoose(bs, k, 0, cur, choices);
    std::vector<std::vector<OrbifoldPoint>> opts;
    for (const auto& c : choices) {
      std::vector<OrbifoldPoint> pts;
      for (long b : c) pts.push_back({r, b});
      opts.push_back(pts);
    }
    per_r.push_back(opts);
  }

  std::vector<Basket> out;
  std::vector<OrbifoldPoint> acc;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == per_r.size()) {
      out.emplace_back(acc);
      return;
    }
    for (const auto& opt : per_r[i]) {
      acc.insert(acc.end(), opt.begin(), opt.end());
      rec(i + 1);
      acc.resize(acc.size() - opt.size());
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool rr_fano_integral(const Basket& B, const Rational& c1cubed) {
  Rational chi = c1cubed / 2 + 3;
  for (const auto& p : B.points()) chi -= Rational(p.b * (p.r - p.b), 2 * p.r);
  return chi.is_integer();
}

}  // namespace qfano
