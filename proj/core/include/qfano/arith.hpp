#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qfano {

using Integer = mpz_class;

// Raised on malformed input: zero modulus, division by zero, composite
// "prime", invalid singularity data and the like.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  template <std::integral A, std::integral B>
  Rational(A num, B den) : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

  static Rational parse(const std::string& text);  // "n" or "n/d"

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Integer floor() const;
  Integer ceil() const;
  // x - floor(x), in [0, 1).
  Rational frac() const;
  long to_long() const;  // requires an integer value that fits

  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational abs(const Rational& x);

long residue(long a, long r);
Integer residue(const Integer& a, const Integer& r);

// F_r(x) = (x mod r)(-x mod r) / (2r).
Rational sigma_pair(long x, long r);

bool is_prime(long p);

// p-adic valuation; nullopt stands for +infinity (x = 0).
std::optional<long> p_adic_valuation(const Rational& x, long p);
long p_adic_valuation(long x, long p);  // x != 0

inline int indicator(bool statement) { return statement ? 1 : 0; }

long gcd(long a, long b);
long lcm(long a, long b);

// Prime-power factors sorted by value: 12 -> {3, 4}.
std::vector<long> prime_power_factors(long n);
std::vector<long> divisors(long n);

// ceil(100 x) / 100 rendered with trailing zeros trimmed ("74.52", "67.5", "3").
std::string display_hundredths(const Rational& x);

}  // namespace qfano
