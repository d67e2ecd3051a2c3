#include "qfano/wps.hpp"

namespace qfano {

WeightedP3 WeightedP3::make(long w0, long w1, long w2, long w3) {
  WeightedP3 w{{w0, w1, w2, w3}};
  for (long x : w.weights)
    if (x <= 0) throw InvalidInput("weights must be positive");
  return w;
}

bool WeightedP3::well_formed() const {
  for (int skip = 0; skip < 4; ++skip) {
    long g = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) g = gcd(g, weights[i]);
    if (g != 1) return false;
  }
  return true;
}

std::vector<long> h0_series(const WeightedP3& w, long smax) {
  if (smax < 0) throw InvalidInput("smax must be nonnegative");
  std::vector<long> dp(smax + 1, 0);
  dp[0] = 1;
  for (long wi : w.weights)
    for (long s = wi; s <= smax; ++s) dp[s] += dp[s - wi];
  return dp;
}

long h0(const WeightedP3& w, long s) {
  if (s < 0) throw InvalidInput("degree must be nonnegative");
  return h0_series(w, s).back();
}

long anticanonical_degree(const WeightedP3& w) {
  long d = 0;
  for (long x : w.weights) d += x;
  return d;
}

Rational anticanonical_volume(const WeightedP3& w) {
  Integer d = anticanonical_degree(w);
  Integer prod = 1;
  for (long x : w.weights) prod *= x;
  Integer cube = d * d * d;
  return Rational(cube, prod);
}

}  // namespace qfano
