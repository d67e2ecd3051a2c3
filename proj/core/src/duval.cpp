#include "qfano/duval.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qfano {

DuValType DuValType::A(int n) {
  if (n < 1) throw InvalidInput("A_n needs n >= 1");
  return {DuValKind::A, n};
}

DuValType DuValType::D(int m) {
  if (m < 4) throw InvalidInput("D_m needs m >= 4");
  return {DuValKind::D, m};
}

DuValType DuValType::E(int n) {
  if (n < 6 || n > 8) throw InvalidInput("E_n needs n in {6,7,8}");
  return {DuValKind::E, n};
}

DuValType DuValType::parse(const std::string& name) {
  if (name.size() < 2) throw InvalidInput("bad Du Val type: " + name);
  std::string digits = name.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 4)
    throw InvalidInput("bad Du Val type: " + name);
  int n = std::stoi(digits);
  switch (name[0]) {
    case 'A': case 'a': return A(n);
    case 'D': case 'd': return D(n);
    case 'E': case 'e': return E(n);
    default: throw InvalidInput("bad Du Val type: " + name);
  }
}

std::string DuValType::name() const {
  const char* k = kind == DuValKind::A ? "A" : (kind == DuValKind::D ? "D" : "E");
  return k + std::to_string(rank);
}

DuValInvariants invariants(const DuValType& t) {
  long n = t.rank;
  switch (t.kind) {
    case DuValKind::A: return {n + 1, n + 1, n + 1, n + 1};
    case DuValKind::D: return {n + 1, n, 4 * n - 8, 4};
    case DuValKind::E:
      if (n == 6) return {7, 6, 24, 3};
      if (n == 7) return {8, 7, 48, 2};
      return {9, 8, 120, 1};
  }
  throw InvalidInput("unreachable Du Val kind");
}

IntMatrix cartan_matrix(const DuValType& t) {
  int n = t.rank;
  IntMatrix m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = -2;
  auto edge = [&m](int a, int b) { m[a][b] = m[b][a] = 1; };
  switch (t.kind) {
    case DuValKind::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case DuValKind::D:
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case DuValKind::E:
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(2, n - 1);
      break;
  }
  return m;
}

Integer determinant(const IntMatrix& src) {
  // Bareiss fraction-free elimination.
  size_t n = src.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = src[i][j];
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Integer> class_group(const DuValType& t) {
  IntMatrix src = cartan_matrix(t);
  size_t n = src.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = src[i][j];

  for (size_t k = 0; k < n; ++k) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (k,k).
      size_t bi = n, bj = n;
      for (size_t i = k; i < n; ++i)
        for (size_t j = k; j < n; ++j)
          if (a[i][j] != 0 && (bi == n || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == n) break;
      std::swap(a[k], a[bi]);
      for (auto& row : a) std::swap(row[k], row[bj]);

      bool clean = true;
      for (size_t i = k + 1; i < n; ++i) {
        Integer f = a[i][k] / a[k][k];
        for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      for (size_t j = k + 1; j < n; ++j) {
        Integer f = a[k][j] / a[k][k];
        for (size_t i = k; i < n; ++i) a[i][j] -= f * a[i][k];
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition d_k | every remaining entry.
      bool divides = true;
      for (size_t i = k + 1; i < n && divides; ++i)
        for (size_t j = k + 1; j < n; ++j)
          if (a[i][j] % a[k][k] != 0) {
            for (size_t c = k; c < n; ++c) a[k][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<Integer> factors;
  for (size_t k = 0; k < n; ++k) {
    Integer d = abs(a[k][k]);
    if (d > 1) factors.push_back(d);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

namespace {

// Exact inverse of a small nonsingular integer matrix by Gauss-Jordan.
std::vector<std::vector<Rational>> inverse(const IntMatrix& m) {
  size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[c], a[p]);
    Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

std::vector<Rational> multiplicities(const DuValType& t, const WeilClass& c) {
  IntMatrix m = cartan_matrix(t);
  if (c.pairing.size() != m.size()) throw InvalidInput("pairing length differs from rank");
  auto inv = inverse(m);
  std::vector<Rational> out(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) out[i] -= inv[i][j] * c.pairing[j];
  return out;
}

bool has_integral_multiplicity(const DuValType& t, const WeilClass& c) {
  auto mult = multiplicities(t, c);
  return std::any_of(mult.begin(), mult.end(), [](const Rational& x) { return x.is_integer(); });
}

std::vector<WeilClass> class_representatives(const DuValType& t) {
  size_t n = static_cast<size_t>(t.rank);
  auto key = [&t](const WeilClass& c) {
    std::vector<std::string> k;
    for (const auto& x : multiplicities(t, c)) k.push_back(x.frac().str());
    return k;
  };
  std::vector<WeilClass> reps{WeilClass{std::vector<long>(n, 0)}};
  std::map<std::vector<std::string>, size_t> seen{{key(reps[0]), 0}};
  for (size_t head = 0; head < reps.size(); ++head) {
    for (size_t i = 0; i < n; ++i) {
      WeilClass next = reps[head];
      next.pairing[i] += 1;
      auto k = key(next);
      if (seen.emplace(k, reps.size()).second) reps.push_back(next);
    }
  }
  return reps;
}

}  // namespace qfano
