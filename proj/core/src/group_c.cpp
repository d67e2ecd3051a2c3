#include <algorithm>
#include <functional>
#include <sstream>

#include "qfano/eliminate.hpp"

namespace qfano {

namespace {

const Rational kA2mK(1, 330);

std::string tuple_str(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string tuples_str(const std::vector<std::vector<long>>& vs) {
  std::string s;
  for (const auto& v : vs) s += tuple_str(v);
  return s.empty() ? "none" : s;
}

std::string set_str(const std::set<long>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (long v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

// h^0(sA) under the Step 1 ansatz with x = (x2, x3, x5, x11), y = (y2, y3, y5, y11).
Rational ansatz(long s, long x_A1, long rX, const std::vector<long>& x, const std::vector<long>& y) {
  static const long r[4] = {2, 3, 5, 11};
  long half = s / 2, odd = s % 2;
  Rational h = Rational(s * s, 2) * kA2mK + 2 - Rational(x_A1 * odd, 4 * rX);
  for (int i = 0; i < 4; ++i) h -= sigma_pair(half * x[i] + odd * y[i], r[i]);
  return h;
}

long h0_table(const std::vector<long>& values, long s) {
  if (s < 0) return 0;
  if (s == 0) return 1;
  return values.at(s - 1);
}

struct FoliationDetail {
  Rational precondition;  // rXc2c1 - (5/16) rXc13
  long p_min;
};

FoliationDetail foliation_detail(const Candidate& c, const Rational& delta) {
  Rational pre = Rational(c.rXc2c1) - Rational(5, 16) * c.rXc13;
  if (!(pre < delta))
    throw FoliationPrecondition("rXc2c1 - (5/16) rXc13 = " + pre.str() + " is not below delta = " + delta.str());
  long q = c.q;
  for (long p = 2 * q / 3 + 1; p < q; ++p) {
    Rational coef = Rational(-4 * p * p + 6 * p * q - q * q, 4 * q * q);
    if (Rational(c.rXc2c1) - coef * c.rXc13 >= delta) return {pre, p};
  }
  throw FoliationPrecondition("no p in (2q/3, q) satisfies the refined inequality");
}

Rational group_c_delta(const GroupCDerivation& d, long rX) {
  long xmin = *d.x_A1_values.begin();
  return Rational(3, 2) * xmin + (Rational(d.r0) - Rational(1, d.r0)) * rX;
}

}  // namespace

long group_c_closed_form(long s) {
  if (s <= 0 || s >= 66) throw InvalidInput("group_c_closed_form needs 0 < s < 66");
  Rational h = Rational(s * s, 660) + 2 - sigma_pair(s, 2) - sigma_pair(s, 3) - sigma_pair(2 * s, 5) -
               sigma_pair(2 * s, 11);
  if (!h.is_integer() || h.sign() < 0) throw std::logic_error("closed form not a nonnegative integer");
  return h.to_long();
}

GroupCDerivation solve_group_c_residues(const Candidate& c) {
  GroupCDerivation out;
  auto& cert = out.steps;
  cert.case_id = identify_case(c).value_or(0);
  cert.group = "C";

  auto det = determine_curves(c);
  if (auto* cfg = std::get_if<CurveConfig>(&det)) {
    for (const auto& cc : cfg->curves) out.r0 = cc.j;
  } else {
    cert.mechanical("determine crepant curves", std::get<Undetermined>(det).reason);
    return out;
  }
  std::multiset<long> odd;
  bool has2 = false;
  for (const auto& p : c.basket.points()) {
    if (p.r == 2)
      has2 = true;
    else
      odd.insert(p.r);
  }
  if (out.r0 > 1) odd.insert(out.r0);
  bool partition = odd == std::multiset<long>{3, 5, 11};
  cert.mechanical("odd basket indices together with r0 = " + std::to_string(out.r0),
                  partition ? "exactly {3, 5, 11}" : "not {3, 5, 11}");
  Rational a2 = Rational(c.rXc13, c.rX * c.q * c.q);
  cert.mechanical("-A^2 K = rXc1^3 / (r_X q^2)", a2.str());
  if (!partition || a2 != kA2mK) return out;

  // Step 1: h0(2A) in Z.
  std::vector<long> x2s = has2 ? std::vector<long>{0, 1} : std::vector<long>{0};
  std::set<long> h2;
  for (long x2 : x2s)
    for (long x3 = 0; x3 < 3; ++x3)
      for (long x5 = 0; x5 < 5; ++x5)
        for (long x11 = 0; x11 < 11; ++x11) {
          Rational h = ansatz(2, 0, c.rX, {x2, x3, x5, x11}, {0, 0, 0, 0});
          if (h.is_integer()) {
            out.x_solutions.push_back({x2, x3, x5, x11});
            h2.insert(h.to_long());
          }
        }
  cert.mechanical("(x2, x3, x5, x11) with h0(2A) integral", tuples_str(out.x_solutions) + "; h0(2A) in " + set_str(h2),
                  Integer(static_cast<long>(x2s.size() * 3 * 5 * 11)));
  bool signs = !out.x_solutions.empty();
  for (const auto& x : out.x_solutions)
    signs = signs && x[0] == 0 && (x[1] == 2 || x[1] == 1) && (x[2] == 4 || x[2] == 1) && (x[3] == 4 || x[3] == 7);
  if (!signs || h2 != std::set<long>{0}) return out;
  cert.mechanical("h0(2A) = 0 forces h0(A) = 0; F_r is even, so flip signs to x = (0, 2, 4, 4)", "normalized");

  // Step 2: h0(A) - h0(3A) in Z. x_A1 and y2 cancel.
  std::vector<long> xn = {0, 2, 4, 4};
  for (long y3 = 0; y3 < 3; ++y3)
    for (long y5 = 0; y5 < 5; ++y5)
      for (long y11 = 0; y11 < 11; ++y11) {
        Rational d = ansatz(1, 0, c.rX, xn, {0, y3, y5, y11}) - ansatz(3, 0, c.rX, xn, {0, y3, y5, y11});
        if (d.is_integer()) out.y_solutions.push_back({y3, y5, y11});
      }
  cert.mechanical("(y3, y5, y11) with h0(A) - h0(3A) integral", tuples_str(out.y_solutions), Integer(3 * 5 * 11));
  if (out.y_solutions.size() != 1) return out;
  const auto& y = out.y_solutions[0];

  // Step 3: h0(A) = 0 determines x_A1 per y2.
  std::vector<long> y2s = has2 ? std::vector<long>{0, 1} : std::vector<long>{0};
  std::vector<std::pair<long, long>> pairs;
  for (long y2 : y2s) {
    Rational rest = ansatz(1, 0, c.rX, xn, {y2, y[0], y[1], y[2]});
    Rational x = rest * 4 * c.rX;
    if (x.is_integer() && x.sign() >= 0) {
      out.x_A1_values.insert(x.to_long());
      pairs.push_back({y2, x.to_long()});
    }
  }
  std::string ps;
  for (auto [y2, x] : pairs) ps += "(y2=" + std::to_string(y2) + ", x_A1=" + std::to_string(x) + ")";
  cert.mechanical("x_A1 / (4 r_X) + F_2(y2) = 1/4 from h0(A) = 0", ps.empty() ? "none" : ps);
  if (pairs.empty()) return out;

  bool match = true;
  long top = std::min(c.q, 66L);
  for (auto [y2, x] : pairs)
    for (long s = 1; s < top; ++s) {
      Rational h = ansatz(s, x, c.rX, xn, {y2, y[0], y[1], y[2]});
      if (h != Rational(group_c_closed_form(s))) match = false;
    }
  out.closed_form_matches = match;
  cert.mechanical("substitute into h0(sA) for 0 < s < " + std::to_string(top),
                  match ? "equals s^2/660 + 2 - F2(s) - F3(s) - F5(2s) - F11(2s)" : "differs from the closed form");
  return out;
}

std::set<long> movable_thresholds(const std::vector<long>& values) {
  std::set<long> out{0};
  for (long s = 1; s <= static_cast<long>(values.size()); ++s) {
    long h = h0_table(values, s);
    if (h > h0_table(values, s - 5) && h > h0_table(values, s - 6)) out.insert(s);
  }
  return out;
}

std::vector<std::vector<long>> decompose(long n, const std::vector<long>& parts) {
  if (n < 0) throw InvalidInput("decompose needs n >= 0");
  for (long p : parts)
    if (p <= 0) throw InvalidInput("decompose needs positive parts");
  std::vector<std::vector<long>> out;
  std::vector<long> m(parts.size(), 0);
  std::function<void(size_t, long)> rec = [&](size_t i, long left) {
    if (i == parts.size()) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (long k = 0; k * parts[i] <= left; ++k) {
      m[i] = k;
      rec(i + 1, left - k * parts[i]);
    }
    m[i] = 0;
  };
  rec(0, n);
  return out;
}

long foliation_bounds(const Candidate& c, const Rational& delta) { return foliation_detail(c, delta).p_min; }

Verdict eliminate_group_c_minus(long case_id) { return eliminate_group_c_minus(case_id, candidate_for_case(case_id)); }

Verdict eliminate_group_c_minus(long case_id, const Candidate& c) {
  static const std::set<long> kIds = {4, 7, 8, 12, 14, 15};
  if (!kIds.count(case_id)) throw InvalidInput("case " + std::to_string(case_id) + " is not in Group C-");
  auto d = solve_group_c_residues(c);
  EliminationCertificate cert = d.steps;
  cert.case_id = case_id;
  cert.group = "C-";
  if (d.x_A1_values != std::set<long>{c.rX}) return stop(std::move(cert), "x_A1 = r_X not derived");
  Rational delta = Rational(3, 2) * c.rX + (Rational(d.r0) - Rational(1, d.r0)) * c.rX;
  bool over = delta > c.nabla;
  cert.mechanical("(3/2) r_X + (r0 - 1/r0) r_X with r0 = " + std::to_string(d.r0) + ": " + delta.str() + " (" +
                      display_hundredths(delta) + ") vs nabla = " + c.nabla.str(),
                  over ? "exceeds nabla" : "within nabla");
  if (!over) return stop(std::move(cert), "bound not exceeded");
  return conclude(std::move(cert));
}

Verdict eliminate_group_c_plus(long case_id) { return eliminate_group_c_plus(case_id, candidate_for_case(case_id)); }

Verdict eliminate_group_c_plus(long case_id, const Candidate& c) {
  static const std::set<long> kIds = {3, 6, 11, 13, 21, 22};
  if (!kIds.count(case_id)) throw InvalidInput("case " + std::to_string(case_id) + " is not in Group C+");
  auto d = solve_group_c_residues(c);
  EliminationCertificate cert = d.steps;
  cert.case_id = case_id;
  cert.group = "C+";
  if (d.x_A1_values.empty() || !d.closed_form_matches) return stop(std::move(cert), "closed form not derived");

  Rational delta = group_c_delta(d, c.rX);
  cert.mechanical("delta = (3/2) min x_A1 + (r0 - 1/r0) r_X", delta.str() + " (" + display_hundredths(delta) + ")");

  FoliationDetail fol;
  try {
    fol = foliation_detail(c, delta);
  } catch (const FoliationPrecondition& e) {
    cert.mechanical("refined Kawamata-Miyaoka alternatives", e.what());
    return stop(std::move(cert), "foliation bound unavailable");
  }
  long q = c.q, p_min = fol.p_min;
  cert.mechanical("rXc2c1 - (5/16) rXc1^3 < delta excludes the 16/5 alternative",
                  fol.precondition.str() + " < " + delta.str());
  cert.mechanical("least p in (2q/3, q) with rXc2c1 - ((-4p^2 + 6pq - q^2)/(4q^2)) rXc1^3 >= delta",
                  "p = iota(-K_F) >= " + std::to_string(p_min));
  bool window = q - p_min <= 10 && 67 * p_min >= 57 * q && 6 * p_min > 5 * q;
  cert.mechanical("q - p <= 10, p >= 57q/67 and p > 5q/6 for p in [" + std::to_string(p_min) + ", " +
                      std::to_string(q - 1) + "]",
                  window ? "hold" : "fail");
  if (!window) return stop(std::move(cert), "p window too wide");

  std::vector<long> values;
  for (long s = 1; s <= 34; ++s) values.push_back(group_c_closed_form(s));
  auto movable = movable_thresholds(values);
  cert.mechanical("effective iota avoiding A5 and A6 up to 34", set_str(movable));

  cert.cited("the base of the family of leaves is P^1, so iota(e_*R(g)) = 2 iota(e_*G) - q + p",
             "As X is rationally connected", "iota(e_*R(g)) = 2g - (q - p)");
  cert.cited("|e_*G| is movable", "|e_*G| is a movable linear system", "h0(g) >= 2");
  long g_min = 0;
  for (long s = 1; s <= 34 && !g_min; ++s)
    if (values[s - 1] >= 2) g_min = s;
  cert.mechanical("least s with h0(sA) >= 2", "g = iota(e_*G) >= " + std::to_string(g_min));
  if (!g_min) return stop(std::move(cert), "no movable class below 35");

  long dmax = q - p_min;
  bool k1 = g_min > dmax;
  cert.mechanical("k = 1: iota(e_*R(g)) < g against 2g - (q - p) for g >= " + std::to_string(g_min),
                  k1 ? "excluded" : "not excluded");
  if (!k1) return stop(std::move(cert), "k = 1 not excluded");

  cert.cited("D_1, ..., D_k pairwise have no common components",
             "pairwisely $D_1, \\dots, D_k$ have no common components", "reduced parts are disjoint");
  long s1 = 0, s2 = 0;
  for (long s = 1; s <= 34 && !s1; ++s)
    if (values[s - 1] > 0) s1 = s;
  for (long s = s1 + 1; s <= 34 && !s2; ++s)
    if (values[s - 1] > h0_table(values, s - s1)) s2 = s;
  bool k2 = s1 && s2 && values[s1 - 1] == 1 && s1 + s2 > dmax;
  cert.mechanical("k = 2: least iota of two disjoint effective divisors",
                  std::to_string(s1) + " + " + std::to_string(s2) + " = " + std::to_string(s1 + s2) +
                      (k2 ? " > q - p" : " <= q - p"));
  if (!k2) return stop(std::move(cert), "k = 2 not excluded");

  std::set<long> primes{s1, s2};
  for (long t : movable)
    if (t > 0 && t < 30) primes.insert(t);
  std::set<long> avoid;
  for (long g = g_min; g <= 59; ++g)
    for (long e : primes) {
      if (e == s1 || e == s2 || 2 * e > g) continue;
      long rest = g - 2 * e;
      if (rest <= 34 && movable.count(rest)) avoid.insert(g);
    }
  cert.mechanical("k >= 3: some D_i avoids A5 and A6; iota of non-reduced members avoiding both, prime iota below 30 in " +
                      set_str(primes),
                  "g in " + set_str(avoid));
  if (avoid.empty()) return conclude(std::move(cert));

  std::vector<long> parts(primes.begin(), primes.end());
  bool all11 = true;
  for (long g : avoid) {
    auto decs = decompose(g, parts);
    std::string ds;
    for (const auto& m : decs) {
      bool nonreduced = false;
      long nr = 0;
      std::string term;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] >= 2) nonreduced = true;
        if (m[i] > 0) nr += (m[i] - 1) * parts[i];
        if (m[i] > 0) term += (term.empty() ? "" : "+") + (m[i] > 1 ? std::to_string(m[i]) + "*" : "") + std::to_string(parts[i]);
      }
      if (!nonreduced) continue;
      ds += (ds.empty() ? "" : "; ") + term + " -> " + std::to_string(nr);
      if (nr % 11 != 0) all11 = false;
    }
    cert.mechanical("non-reduced decompositions of " + std::to_string(g) + " and iota of D - D_red", ds);
  }
  bool gap = true;
  for (long dd = 1; dd <= dmax; ++dd)
    if (dd % 11 == 0) gap = false;
  cert.mechanical("11 | iota(e_*R(g)) = 88 - (q - p) with 0 < q - p <= " + std::to_string(dmax),
                  all11 && gap ? "impossible, so iota(mu_*F) >= 60" : "possible");
  if (!(all11 && gap)) return stop(std::move(cert), "leaf bound not established");

  cert.cited("F maps birationally to F_n with n in {1, 2}, so (-K_F - Delta_F)^2 <= (-K_{F_n})^2",
             "(-K_{F_n})^2 = 8", "(-K_F - Delta_F)^2 <= 8");
  Rational A3 = Rational(c.rXc13, c.rX * q * q * q);
  std::string vals;
  bool all = A3 == Rational(1, 330 * q);
  for (long p = p_min; p < q; ++p) {
    Rational v = Rational(60 * p * p, 330 * q);
    vals += (vals.empty() ? "" : ", ") + ("60*" + std::to_string(p) + "^2/(330*" + std::to_string(q) + ") = " +
                                          std::to_string(60 * p * p) + "/" + std::to_string(330 * q));
    if (!(v > 8)) all = false;
  }
  cert.mechanical("(-K_F - Delta_F)^2 >= 60 p^2 A^3 with A^3 = " + A3.str() + ": " + vals,
                  all ? "every value exceeds 8" : "some value is at most 8");
  if (!all) return stop(std::move(cert), "final inequality fails");
  return conclude(std::move(cert));
}

}  // namespace qfano
