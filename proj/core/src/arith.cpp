#include "qfano/arith.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace qfano {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidInput("not a rational: " + text);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  v_ /= o.v_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw InvalidInput("rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

long residue(long a, long r) {
  if (r <= 0) throw InvalidInput("residue modulus must be positive");
  long m = a % r;
  return m < 0 ? m + r : m;
}

Integer residue(const Integer& a, const Integer& r) {
  if (r <= 0) throw InvalidInput("residue modulus must be positive");
  Integer m;
  mpz_fdiv_r(m.get_mpz_t(), a.get_mpz_t(), r.get_mpz_t());
  return m;
}

Rational sigma_pair(long x, long r) {
  long a = residue(x, r);
  long b = residue(-x, r);
  return Rational(a * b, 2 * r);
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long p_adic_valuation(long x, long p) {
  if (x == 0) throw InvalidInput("valuation of zero is infinite");
  if (!is_prime(p)) throw InvalidInput("valuation base must be prime");
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

namespace {
long integer_valuation(Integer x, long p) {
  long v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
    x /= p;
    ++v;
  }
  return v;
}
}  // namespace

std::optional<long> p_adic_valuation(const Rational& x, long p) {
  if (!is_prime(p)) throw InvalidInput("valuation base must be prime");
  if (x.is_zero()) return std::nullopt;
  return integer_valuation(abs(x).num(), p) - integer_valuation(x.den(), p);
}

long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

std::vector<long> prime_power_factors(long n) {
  if (n < 1) throw InvalidInput("factorisation of a non-positive integer");
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    long pe = 1;
    while (n % p == 0) {
      n /= p;
      pe *= p;
    }
    out.push_back(pe);
  }
  if (n > 1) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::string display_hundredths(const Rational& x) {
  Integer hundredths = (x * 100).ceil();
  bool negative = hundredths < 0;
  if (negative) hundredths = -hundredths;
  Integer whole = hundredths / 100;
  long cents = Integer(hundredths % 100).get_si();
  std::string s = (negative ? "-" : "") + whole.get_str();
  if (cents != 0) {
    std::string frac = (cents < 10 ? "0" : "") + std::to_string(cents);
    if (frac.back() == '0') frac.pop_back();
    s += "." + frac;
  }
  return s;
}

}  // namespace qfano
