#include "qfano/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "qfano/lb.hpp"
#include "qfano/rr.hpp"

namespace qfano {

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.basket != b.basket) return a.basket < b.basket;
  if (a.q != b.q) return a.q < b.q;
  if (a.J_A != b.J_A) return a.J_A < b.J_A;
  return a.rXc13 < b.rXc13;
}

long q_upper_bound(long rXc2c1) {
  Integer c = rXc2c1;
  long q = 4 * rXc2c1;
  while (q > 0 && Integer(Integer(q) * q + 2 * q - 4) > 4 * q * c) --q;
  return q;
}

std::vector<Step1Item> step1(long q_min) {
  std::vector<Step1Item> out;
  for_each_R([&](const Multiset& R) {
    long c = rX_c2c1(R).to_long();
    if (4 * c > q_min) out.push_back({R, c});
  });
  return out;
}

namespace {

class LBCache {
 public:
  explicit LBCache(const Multiset& R) : ctx_(R) {}
  long operator()(long N) {
    auto it = memo_.find(N);
    if (it != memo_.end()) return it->second;
    return memo_[N] = lb(ctx_, N);
  }
  // sum (p^a - 1/p^a) LB(p^a) over p^a || J, as a numerator over J.
  long load_over_J(long J) {
    if (static_cast<size_t>(J) >= loads_.size()) loads_.resize(J + 1, -1);
    long& v = loads_[J];
    if (v < 0) {
      v = 0;
      for (long pa : prime_power_factors(J)) v += (pa * pa - 1) * (*this)(pa) * (J / pa);
    }
    return v;
  }

 private:
  LBContext ctx_;
  std::map<long, long> memo_;
  std::vector<long> loads_;
};

// 2 r_X chi(-K) = rXc13 + 6 r_X - sum b(r-b) r_X / r, so RR-Fano holds iff
// rXc13 is congruent to the basket's correction modulo 2 r_X.
long rr_fano_shift(const Basket& B, long rX) {
  long s = 6 * rX;
  for (const auto& p : B.points()) s -= p.b * (p.r - p.b) * (rX / p.r);
  return residue(-s, 2 * rX);
}

}  // namespace

std::vector<Precursor> step2(const Multiset& R, long rXc2c1, long q_min, SearchMode mode, bool prune) {
  __extension__ typedef __int128 i128;
  std::vector<Precursor> out;
  const long rX = lcm_of(R);
  const long q_lo = mode == SearchMode::Greater ? q_min + 1 : q_min;
  const long q_hi = mode == SearchMode::Greater ? q_upper_bound(rXc2c1) : std::min(q_min, q_upper_bound(rXc2c1));
  std::optional<std::map<long, std::vector<Basket>>> by_shift;
  LBCache lbs(R);

  for (long q = q_lo; q <= q_hi; ++q) {
    const i128 qq = static_cast<i128>(q) * q;
    const i128 slope = qq + 2 * q - 4;  // (q^2+2q-4) rXc13 <= 4 q^2 rXc2c1
    const i128 budget = 4 * qq * rXc2c1;
    for (long J : divisors(q)) {
      const i128 unit = qq / J;  // rXc13 = m q^2 / J_A, integral since J_A | q
      if (slope * unit > budget) continue;
      if (prune) {
        // load > nabla(m = 1)  <=>  load * 4q^2 > 4q^2 rXc2c1 - slope * unit
        if (static_cast<i128>(lbs.load_over_J(J)) * 4 * qq > (budget - slope * unit) * J) continue;
      }
      for (i128 m = 1; slope * m * unit <= budget; ++m) {
        const long rXc13 = static_cast<long>(m * unit);
        if (rXc13 < q) continue;
        if (!by_shift) {
          by_shift.emplace();
          for (auto& B : enumerate_baskets(R)) (*by_shift)[rr_fano_shift(B, rX)].push_back(B);
        }
        auto hit = by_shift->find(residue(rXc13, 2 * rX));
        if (hit == by_shift->end()) continue;
        for (const auto& B : hit->second) out.push_back({B, q, J, rXc13, rXc2c1});
      }
    }
  }
  return out;
}

std::optional<Candidate> step3(const Precursor& pre) {
  Candidate c;
  c.basket = pre.basket;
  c.q = pre.q;
  c.J_A = pre.J_A;
  c.rX = gorenstein_index(pre.basket);
  c.rXc13 = pre.rXc13;
  c.rXc2c1 = pre.rXc2c1;
  c.nabla = nabla(pre.q, pre.rXc13, pre.rXc2c1);
  LBContext ctx(pre.basket.R());
  Rational load;
  for (long pa : prime_power_factors(pre.J_A)) {
    long v = lb(ctx, pa);
    c.prime_powers.push_back(pa);
    c.lb_values.push_back(v);
    load += (Rational(pa) - Rational(1, pa)) * v;
  }
  if (c.nabla < load) return std::nullopt;
  return c;
}

std::vector<Candidate> run_search(long q_min, SearchMode mode, int workers) {
  if (q_min < 6) throw InvalidInput("search needs q_min >= 6");
  if (workers < 1) throw InvalidInput("search needs at least one worker");
  const auto items = step1(q_min);
  std::atomic<size_t> next{0};
  std::vector<std::vector<Candidate>> found(workers);
  auto work = [&](int w) {
    for (size_t i = next++; i < items.size(); i = next++)
      for (const auto& pre : step2(items[i].R, items[i].rXc2c1, q_min, mode, true))
        if (auto c = step3(pre)) found[w].push_back(std::move(*c));
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  std::vector<Candidate> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end(), candidate_less);
  return all;
}

std::vector<std::string> check_candidate(const Candidate& c) {
  std::vector<std::string> bad;
  auto R = c.basket.R();
  if (!admissible(R)) bad.push_back("basket not admissible");
  if (c.rX != gorenstein_index(c.basket)) bad.push_back("r_X differs from lcm of basket");
  if (admissible(R) && Rational(c.rXc2c1) != rX_c2c1(R)) bad.push_back("rXc2c1 differs from basket value");
  if (c.q < 1 || c.J_A < 1 || c.q % c.J_A != 0) bad.push_back("J_A does not divide q");
  if (Integer(Integer(c.J_A) * c.rXc13) % (Integer(c.q) * c.q) != 0) bad.push_back("q^2 does not divide J_A rXc13");
  if (c.rX > 0 && !rr_fano_integral(c.basket, Rational(c.rXc13, c.rX))) bad.push_back("RR-Fano integrality fails");
  if (c.rXc13 < c.q) bad.push_back("rXc13 < q");
  Rational nb = nabla(c.q, c.rXc13, c.rXc2c1);
  if (nb < 0) bad.push_back("test inequality fails");
  if (nb != c.nabla) bad.push_back("stored nabla differs");
  if (c.prime_powers != prime_power_factors(c.J_A)) bad.push_back("prime powers do not factor J_A");
  if (admissible(R) && c.prime_powers.size() == c.lb_values.size()) {
    LBContext ctx(R);
    Rational load;
    for (size_t i = 0; i < c.prime_powers.size(); ++i) {
      if (lb(ctx, c.prime_powers[i]) != c.lb_values[i]) bad.push_back("LB value mismatch");
      load += (Rational(c.prime_powers[i]) - Rational(1, c.prime_powers[i])) * c.lb_values[i];
    }
    if (nb < load) bad.push_back("nabla below prime-power load");
  } else {
    bad.push_back("LB values not aligned with prime powers");
  }
  return bad;
}

}  // namespace qfano
