#include "qfano/lb.hpp"

#include <algorithm>
#include <map>

namespace qfano {

LBContext::LBContext(Multiset R) : R_(std::move(R)) {
  std::sort(R_.begin(), R_.end());
  if (!admissible(R_)) throw InvalidInput("LB context needs an admissible multiset");
  rX_ = lcm_of(R_);
  for (long p : kLBPrimes)
    for (long r : R_) {
      long e = p_adic_valuation(r, p);
      if (e > 0) ++counts_[p][e];
    }
}

long LBContext::n(long p, long e) const {
  if (p < 0 || p >= 24 || e < 1 || e >= 6) return 0;
  return counts_[p][e];
}

bool LBContext::contains(const Multiset& sub) const {
  std::map<long, long> have;
  for (long r : R_) ++have[r];
  for (long r : sub)
    if (--have[r] < 0) return false;
  return true;
}

namespace {

// N - 1 >= n + 1 + if(p | n + 2)
bool enough(long p, long n, long N) { return N - 1 >= n + 1 + indicator((n + 2) % p == 0); }

long f_large(const LBContext& ctx, long p, long N) {
  long np = ctx.n(p, 1);
  return (np > 0 && enough(p, np, N)) ? p : 1;
}

long f_3(const LBContext& ctx, long N) {
  long n3 = ctx.n(3, 1), n9 = ctx.n(3, 2);
  if (n9 > 0 && N - 1 >= 3) return enough(3, n3, N) ? 9 : 3;
  if (n9 == 0 && n3 > 0 && enough(3, n3, N)) return 3;
  return 1;
}

long f_2(const LBContext& ctx, long N) {
  long e = p_adic_valuation(ctx.rX(), 2);
  if (e == 0 || N == 2) return 1;
  long n2 = ctx.n(2, 1), n4 = ctx.n(2, 2), n8 = ctx.n(2, 3), n16 = ctx.n(2, 4);
  long full = 1L << e, half = 1L << (e - 1);

  if (n16 == 1) {
    if (n8 != 0) return 2;
    return n4 != 0 ? 4 : 8;
  }
  if (n8 == 2) {
    if (n4 != 0) return 2;
    return n2 != 0 ? 4 : 8;
  }
  if (n16 == 0 && n8 <= 1 && n4 + n8 > 0 && N - 1 >= 2 * (n4 / 2) + 2) {
    if (n4 <= 1 && N - 1 >= 2 * ((n2 + n8) / 2) + 2) return full;
    if (n4 == 2 && ctx.contains({4, 4}) && N - 1 >= 2 * ((n2 + n8 + 2) / 2) + 2) return full;
    if (n4 == 3 && ctx.contains({4, 4, 4}) && n2 == 0 && n8 == 0) return full;
    return half;
  }
  if (n16 == 0 && n8 == 0 && n4 == 2 && (N - 1 == 2 || N - 1 == 3)) return 2;
  if (n16 == 0 && n8 == 0 && n4 == 0) {
    if (n2 > 0 && n2 <= 2) return 2;
    if (n2 > 2 && N - 1 >= 2 * (n2 / 2) + 2) return 2;
  }
  return 1;
}

}  // namespace

long f_p(const LBContext& ctx, long p, long N) {
  if (!is_prime(p) || p > 23) throw InvalidInput("f_p needs a prime p <= 23");
  if (N < 2) throw InvalidInput("f_p needs N >= 2");
  if (p == 2) return f_2(ctx, N);
  if (p == 3) return f_3(ctx, N);
  return f_large(ctx, p, N);
}

long lb(const LBContext& ctx, long N) {
  if (N < 2) throw InvalidInput("LB needs N >= 2");
  long v = 1;
  for (long p : kLBPrimes) v *= f_p(ctx, p, N);
  return v;
}

}  // namespace qfano
