#pragma once

#include <array>
#include <vector>

#include "qfano/arith.hpp"

namespace qfano {

struct WeightedP3 {
  std::array<long, 4> weights;

  // Rejects nonpositive weights; well-formedness is only reported.
  static WeightedP3 make(long w0, long w1, long w2, long w3);
  // gcd of every three weights is 1.
  bool well_formed() const;
};

// Number of monomials of weighted degree s.
long h0(const WeightedP3& w, long s);
// h0 for s = 0..smax in one pass.
std::vector<long> h0_series(const WeightedP3& w, long smax);

long anticanonical_degree(const WeightedP3& w);
// (sum w)^3 / prod w.
Rational anticanonical_volume(const WeightedP3& w);

}  // namespace qfano
