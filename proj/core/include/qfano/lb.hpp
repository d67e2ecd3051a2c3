#pragma once

#include <array>

#include "qfano/basket.hpp"

namespace qfano {

// R together with the counts n_{p^e} the LB algorithm reads.
class LBContext {
 public:
  explicit LBContext(Multiset R);

  const Multiset& R() const { return R_; }
  long rX() const { return rX_; }
  // n_{p^e}: number of r in R with nu_p(r) = e.
  long n(long p, long e) const;
  // Multiset containment of `sub` in R.
  bool contains(const Multiset& sub) const;

 private:
  Multiset R_;
  long rX_;
  std::array<std::array<long, 6>, 24> counts_{};
};

inline constexpr std::array<long, 9> kLBPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23};

long f_p(const LBContext& ctx, long p, long N);
long lb(const LBContext& ctx, long N);

}  // namespace qfano
