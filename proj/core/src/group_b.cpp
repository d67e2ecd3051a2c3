#include <algorithm>
#include <set>
#include <sstream>

#include "qfano/eliminate.hpp"
#include "qfano/lb.hpp"

namespace qfano {

namespace {

std::string join(const std::vector<long>& v, const char* sep = ",") {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string set_str(const std::set<long>& s) { return "{" + join({s.begin(), s.end()}) + "}"; }

std::string describe(const std::string& what, const BuiltSystem& b) {
  std::string d = what + ": " + b.system.str();
  for (const auto& x : b.dropped) d += "; dropped " + x;
  return d;
}

Rational weight(long j) { return Rational(j) - Rational(1, j); }

long inverse_mod(long b, long r) {
  for (long k = 1; k < r; ++k)
    if (b * k % r == 1) return k;
  return 1;
}

struct Script {
  const Candidate& c;
  EliminationCertificate cert;

  Script(long id, const Candidate& cand) : c(cand) {
    cert.case_id = id;
    cert.group = "B";
  }

  RRData data(const CurveConfig& cfg) const { return RRData{c.basket, c.q, c.rXc13, cfg}; }

  // Records the solver call; true when no integral assignment exists.
  bool unsolvable(const std::string& what, const BuiltSystem& b) {
    auto r = exists_integral_solution(b.system);
    cert.mechanical(describe(what, b),
                    r.solvable ? "solvable, witness (" + join(r.witness) + ")"
                               : "no integral value over " + r.domain_size.get_str() + " assignments",
                    r.domain_size);
    return !r.solvable;
  }

  // Residues of x_A1 modulo the common x modulus for which every system
  // stays solvable.
  std::vector<long> feasible_x(const std::vector<BuiltSystem>& systems, long& modulus) {
    modulus = 1;
    for (const auto& b : systems)
      for (const auto& t : b.system.unknown_terms)
        if (t.label == "x_A1") modulus = lcm(modulus, t.modulus);
    std::vector<long> out;
    Integer domain = 0;
    for (long x = 0; x < modulus; ++x) {
      bool ok = true;
      for (const auto& b : systems) {
        auto sub = b.system.substitute("x_A1", x);
        domain += sub.domain_size();
        if (!exists_integral_solution(sub).solvable) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(x);
    }
    std::string d;
    for (size_t i = 0; i < systems.size(); ++i) d += (i ? " | " : "") + systems[i].system.str();
    cert.mechanical("x_A1 residues mod " + std::to_string(modulus) + " keeping every system solvable: " + d,
                    "{" + join(out) + "}", domain);
    return out;
  }

  // Smallest x_A1 >= lo whose residue is feasible, if any.
  static std::optional<long> least_feasible(const std::vector<long>& res, long modulus, long lo) {
    std::optional<long> best;
    for (long r : res) {
      long x = r;
      if (x < lo) x += ((lo - x + modulus - 1) / modulus) * modulus;
      if (!best || x < *best) best = x;
    }
    return best;
  }

  bool exceeds_nabla(const std::string& what, const Rational& delta) {
    bool over = delta > c.nabla;
    cert.mechanical(what + ": sum (j - 1/j)(-r_X K.C) >= " + delta.str() + " (" + display_hundredths(delta) +
                        ") vs nabla = " + c.nabla.str(),
                    over ? "exceeds nabla" : "within nabla");
    return over;
  }

  std::string budget_str(const std::map<long, long>& b) {
    std::string s;
    for (auto [j, y] : b) s += (s.empty() ? "" : ", ") + curve_name(j) + " total degree <= " + std::to_string(y) + " LB";
    return s.empty() ? "none" : s;
  }
};

Verdict script_20(Script& S) {
  S.cert.mechanical("every crepant curve type j divides J_A = 6; D = J_A A = 6A makes all curve terms integral",
                    "curve terms dropped for s = 6");
  CurveConfig cfg;
  cfg.curves_divide = S.c.J_A;
  auto b = residue_term_builder(1, S.c.J_A, S.data(cfg));
  if (!S.unsolvable("integrality for D = 6A, r' = 1", b)) return stop(std::move(S.cert), "system solvable");
  return conclude(std::move(S.cert));
}

Verdict script_23(Script& S) {
  auto det = determine_curves(S.c);
  auto* cfg = std::get_if<CurveConfig>(&det);
  if (!cfg) {
    S.cert.mechanical("determine crepant curves", std::get<Undetermined>(det).reason);
    return stop(std::move(S.cert), "curve configuration undetermined");
  }
  S.cert.mechanical("determine crepant curves", "J_A = 12 forces one curve per prime power");
  long rp = S.c.rX * S.c.J_A;
  auto b = residue_term_builder(rp, 1, S.data(*cfg));
  if (!S.unsolvable("integrality for D = A, r' = r_X J_A = " + std::to_string(rp), b))
    return stop(std::move(S.cert), "system solvable");
  return conclude(std::move(S.cert));
}

Verdict script_36(Script& S) {
  auto budget = curve_type_budget(S.c);
  S.cert.mechanical("curve types j | J_A = 70 within nabla covering every prime power of J_A", S.budget_str(budget));
  if (budget.count(7) == 0 || budget.at(7) != 1)
    return stop(std::move(S.cert), "A6 degree not forced to LB(7)");
  LBContext ctx(S.c.basket.R());
  long rp = 20 * S.c.rX;
  for (auto [j, y] : budget) {
    if (j == 7) continue;
    Rational k = Rational(rp * lb(ctx, j), S.c.rX);
    long need = j % 2 ? j : 2 * j;
    bool drops = k.is_integer() && Integer(k.num() % need) == 0;
    S.cert.mechanical(curve_name(j) + " curves at r' = " + std::to_string(rp) + ": -r'K.C in " + k.str() + "Z",
                      drops ? "integral for every degree" : "not integral");
    if (!drops) return stop(std::move(S.cert), "curve term not removable");
  }
  CurveConfig cfg;
  cfg.curves.push_back({7, lb(ctx, 7), std::nullopt});
  auto b = residue_term_builder(rp, 1, S.data(cfg));
  if (!S.unsolvable("integrality for D = A, r' = " + std::to_string(rp) + " with one A6 of degree LB(7)", b))
    return stop(std::move(S.cert), "system solvable");
  return conclude(std::move(S.cert));
}

Verdict script_10(Script& S) {
  auto det = determine_curves(S.c);
  auto* cfg = std::get_if<CurveConfig>(&det);
  if (!cfg) {
    S.cert.mechanical("determine crepant curves", std::get<Undetermined>(det).reason);
    return stop(std::move(S.cert), "curve configuration undetermined");
  }
  bool even_other = std::any_of(cfg->curves.begin(), cfg->curves.end(), [](const CrepantCurve& c) { return c.j % 2 == 0; });
  S.cert.mechanical("determine crepant curves", "one A4 of degree LB(5) and an A1 aggregate");
  S.cert.mechanical("2 | J_A and no other curve has even j", even_other ? "not forced" : "x_A1 > 0");
  long lo = even_other ? 0 : 1;
  std::vector<BuiltSystem> sys;
  for (long s : {1, 3}) sys.push_back(residue_term_builder(40, s, S.data(*cfg)));
  long M;
  auto res = S.feasible_x(sys, M);
  auto x = Script::least_feasible(res, M, lo);
  if (!x) return conclude(std::move(S.cert));
  CurveConfig fixed = *cfg;
  fixed.x_A1 = *x;
  if (!S.exceeds_nabla("least admissible x_A1 = " + std::to_string(*x), delta_lower_bound(fixed)))
    return stop(std::move(S.cert), "bound not exceeded");
  return conclude(std::move(S.cert));
}

Verdict script_32_33(Script& S) {
  auto budget = curve_type_budget(S.c);
  S.cert.mechanical("curve types j | J_A = 6 within nabla covering every prime power of J_A", S.budget_str(budget));
  if (budget.count(6) || !budget.count(3) || !budget.count(2))
    return stop(std::move(S.cert), "unexpected curve types");
  S.cert.mechanical("2 | J_A and A1 is the only even type", "x_A1 > 0; A2 curves present");
  LBContext ctx(S.c.basket.R());
  long l3 = lb(ctx, 3);
  std::vector<long> ys;
  for (long y = 1; y <= budget.at(3); ++y) {
    CurveConfig cfg;
    cfg.curves.push_back({3, l3 * y, 1});
    auto b = residue_term_builder(2 * S.c.rX, 2, S.data(cfg));
    if (!S.unsolvable("A2 total degree " + std::to_string(l3 * y) + ", D = 2A, r' = 2r_X", b)) ys.push_back(y);
  }
  S.cert.mechanical("surviving multiples y of LB(3)", "{" + join(ys) + "}");
  if (ys.empty()) return conclude(std::move(S.cert));
  for (long y : ys) {
    CurveConfig cfg;
    cfg.curves.push_back({3, l3 * y, 1});
    cfg.x_A1 = std::nullopt;
    cfg.a1_allowed = true;
    std::vector<BuiltSystem> sys;
    for (long s : {1, 3, 5}) sys.push_back(residue_term_builder(18, s, S.data(cfg)));
    long M;
    auto res = S.feasible_x(sys, M);
    auto x = Script::least_feasible(res, M, 1);
    if (!x) continue;
    CurveConfig fixed = cfg;
    fixed.x_A1 = *x;
    if (!S.exceeds_nabla("y = " + std::to_string(y) + ", least admissible x_A1 = " + std::to_string(*x),
                         delta_lower_bound(fixed)))
      return stop(std::move(S.cert), "bound not exceeded");
  }
  return conclude(std::move(S.cert));
}

Verdict script_24(Script& S) {
  auto budget = curve_type_budget(S.c);
  S.cert.mechanical("curve types j | J_A = 12 within nabla covering every prime power of J_A", S.budget_str(budget));
  if (budget.count(6) || budget.count(12) || !budget.count(3) || !budget.count(4))
    return stop(std::move(S.cert), "unexpected curve types");
  LBContext ctx(S.c.basket.R());
  long l3 = lb(ctx, 3), l4 = lb(ctx, 4);
  Rational w3 = weight(3) * l3, w4 = weight(4) * l4;

  struct T {
    long x, y3, y4;
  };
  std::vector<T> box, survivors;
  for (long y3 = 1; w3 * y3 + w4 <= S.c.nabla; ++y3)
    for (long y4 = 1; w3 * y3 + w4 * y4 <= S.c.nabla; ++y4)
      for (long x = 0; Rational(3, 2) * x + w3 * y3 + w4 * y4 <= S.c.nabla; ++x) box.push_back({x, y3, y4});
  Integer domain = 0;
  for (const auto& t : box) {
    CurveConfig cfg;
    cfg.curves = {{3, l3 * t.y3, 1}, {4, l4 * t.y4, 1}};
    cfg.x_A1 = t.x;
    bool ok = true;
    for (long s : {1, 3}) {
      auto b = residue_term_builder(9, s, S.data(cfg));
      domain += b.system.domain_size();
      if (!exists_integral_solution(b.system).solvable) {
        ok = false;
        break;
      }
    }
    if (ok) survivors.push_back(t);
  }
  std::string surv;
  for (const auto& t : survivors)
    surv += "(" + std::to_string(t.x) + "," + std::to_string(t.y3) + "," + std::to_string(t.y4) + ")";
  S.cert.mechanical("(x_A1, y3, y4) with 3x/2 + (8/3)LB(3)y3 + (15/4)LB(4)y4 <= nabla (" + std::to_string(box.size()) +
                        " tuples), integrality at r' = 9 for s = 1, 3",
                    "survivors " + (surv.empty() ? std::string("none") : surv), domain);
  if (survivors.empty()) return conclude(std::move(S.cert));
  if (survivors.size() != 1) return stop(std::move(S.cert), "curve data not unique");
  const auto& t = survivors.front();
  CurveConfig cfg;
  cfg.curves = {{3, l3 * t.y3, 1}, {4, l4 * t.y4, 1}};
  cfg.x_A1 = t.x;

  const auto& pts = S.c.basket.points();
  Rational A2mK = Rational(S.c.rXc13, S.c.rX * S.c.q * S.c.q);
  Integer n = 1;
  for (const auto& p : pts) n *= p.r;
  std::map<long, long> h;
  for (long s : {2, 3, 6, 30, 31}) {
    std::set<long> values;
    LocalIndexAssignment idx(pts.size(), 0);
    while (true) {
      Rational v = h0_sA(S.c.q, A2mK, cfg, S.c.basket, idx, s);
      if (v.is_integer()) values.insert(v.to_long());
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == pts[i].r) idx[i++] = 0;
      if (i == idx.size()) break;
    }
    S.cert.mechanical("h0(" + std::to_string(s) + "A) over all local indices at the basket points",
                      "integral values " + set_str(values), n);
    if (values.size() != 1) return stop(std::move(S.cert), "h0 value not unique at s = " + std::to_string(s));
    h[s] = *values.begin();
  }
  bool positive = h[2] == 1 && h[3] == 1 && h[6] == 1;
  S.cert.mechanical("unique A_2 in |2A|, A_3 in |3A| and 3A_2 = 2A_3 in |6A|",
                    positive ? "A_3 - A_2 >= 0 lies in |A|, so h0(A) > 0" : "no conclusion");
  if (!positive) return stop(std::move(S.cert), "h0(A) > 0 not derived");
  bool drop = h[31] < h[30];
  S.cert.mechanical("a member of |A| embeds H0(30A) into H0(31A)",
                    "h0(31A) = " + std::to_string(h[31]) + (drop ? " < " : " >= ") + std::to_string(h[30]) + " = h0(30A)");
  if (!drop) return stop(std::move(S.cert), "no monotonicity violation");
  return conclude(std::move(S.cert));
}

// Local indices of the unknown basket terms in a solution, u = i b mod r.
std::vector<long> indices_of(const ResidueConstraintSystem& sys, const Basket& B, const std::vector<long>& sol,
                             std::vector<long>& which) {
  std::vector<long> out;
  which.clear();
  for (size_t k = 0; k < sys.unknown_terms.size(); ++k) {
    const auto& lab = sys.unknown_terms[k].label;
    if (lab.empty() || lab[0] != 'Q') continue;
    long pos = std::stol(lab.substr(1, lab.find(':') - 1));
    const auto& p = B.points()[pos];
    out.push_back(sol[k] * inverse_mod(p.b, p.r) % p.r);
    which.push_back(pos);
  }
  return out;
}

Verdict script_27(Script& S) {
  auto budget = curve_type_budget(S.c);
  S.cert.mechanical("curve types j | J_A = 3 within nabla", S.budget_str(budget));
  if (budget.size() != 1 || !budget.count(3)) return stop(std::move(S.cert), "unexpected curve types");
  LBContext ctx(S.c.basket.R());
  long l3 = lb(ctx, 3);
  std::vector<long> ys;
  for (long y = 1; y <= budget.at(3); ++y) {
    CurveConfig cfg;
    cfg.curves.push_back({3, l3 * y, 1});
    auto b = residue_term_builder(2 * S.c.rX, 1, S.data(cfg));
    if (!S.unsolvable("A2 total degree " + std::to_string(l3 * y) + ", D = A, r' = 2r_X", b)) ys.push_back(y);
  }
  S.cert.mechanical("surviving multiples y of LB(3)", "{" + join(ys) + "}");
  if (ys.empty()) return conclude(std::move(S.cert));
  if (ys.size() != 1 || ys[0] != 2) return stop(std::move(S.cert), "A2 degree not forced to 2 LB(3)");
  long total = 2 * l3;
  S.cert.mechanical("split total degree " + std::to_string(total) + " into curves of degree divisible by LB(3)",
                    "Case (1): one A2 of degree " + std::to_string(total) + "; Case (2): two A2 of degree " +
                        std::to_string(l3));

  long i3 = -1, i6 = -1;
  const auto& pts = S.c.basket.points();
  for (size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].r == 3) i3 = static_cast<long>(k);
    if (pts[k].r == 6) i6 = static_cast<long>(k);
  }
  if (i3 < 0 || i6 < 0) return stop(std::move(S.cert), "basket lacks Q3 or Q6");
  S.cert.cited("for every prime f-exceptional E: i_{E,Q6} = 0 mod 6 in Case (1), i_{E,Q3} = 0 mod 3 in Case (2)",
               "𝗂_{E,Q₆} ≡ 0 mod 6", "holds for G = f(4A) - 2f(2A), which is f-exceptional");

  CurveConfig cfg;
  cfg.curves.push_back({3, total, 1});
  std::map<long, std::set<std::pair<long, long>>> sols;
  for (long s : {2, 4}) {
    auto b = residue_term_builder(70, s, S.data(cfg));
    auto all = all_integral_solutions(b.system);
    std::set<std::pair<long, long>> pairs;
    for (const auto& sol : all) {
      std::vector<long> which;
      auto idx = indices_of(b.system, S.c.basket, sol, which);
      long a = 0, d = 0;
      for (size_t k = 0; k < which.size(); ++k) {
        if (which[k] == i3) a = idx[k];
        if (which[k] == i6) d = idx[k];
      }
      pairs.insert({a, d});
    }
    std::string out;
    for (auto [a, d] : pairs) out += "(" + std::to_string(a) + "," + std::to_string(d) + ")";
    S.cert.mechanical(describe("local indices (Q3, Q6) of f(" + std::to_string(s) + "A), r' = 70", b),
                      out.empty() ? "none" : out, b.system.domain_size());
    sols[s] = pairs;
  }
  bool every = true;
  std::set<std::pair<long, long>> g;
  for (auto [a2, d2] : sols[2])
    for (auto [a4, d4] : sols[4]) {
      long a = residue(a4 - 2 * a2, 3), d = residue(d4 - 2 * d2, 6);
      g.insert({a, d});
      if (a == 0 || d == 0) every = false;
    }
  std::string out;
  for (auto [a, d] : g) out += "(" + std::to_string(a) + "," + std::to_string(d) + ")";
  S.cert.mechanical("(i_{G,Q3} mod 3, i_{G,Q6} mod 6) for G = f(4A) - 2f(2A)",
                    out + (every ? ": neither vanishes, against both cases" : ": a vanishing index occurs"));
  if (!every) return stop(std::move(S.cert), "claim not contradicted");
  return conclude(std::move(S.cert));
}

Verdict script_35(Script& S) {
  auto det = determine_curves(S.c);
  auto* cfg0 = std::get_if<CurveConfig>(&det);
  if (!cfg0 || cfg0->curves.size() != 1) return stop(std::move(S.cert), "curve configuration undetermined");
  S.cert.mechanical("determine crepant curves", "one " + curve_name(cfg0->curves[0].j) + " of degree " +
                                                     std::to_string(cfg0->curves[0].degree) + " and an A1 aggregate");
  CurveConfig cfg = *cfg0;
  cfg.curves[0].unit = 1;  // F_4(s u) does not depend on u
  std::vector<BuiltSystem> sys;
  for (long s : {1, 3, 5}) sys.push_back(residue_term_builder(1, s, S.data(cfg)));
  long M;
  auto res = S.feasible_x(sys, M);
  std::vector<long> xs;
  for (long r : res)
    for (long x = r;; x += M) {
      CurveConfig f = cfg;
      f.x_A1 = x;
      if (delta_lower_bound(f) > S.c.nabla) break;
      xs.push_back(x);
    }
  std::sort(xs.begin(), xs.end());
  S.cert.mechanical("x_A1 with a feasible residue and 3x/2 + (15/4)LB(4) <= nabla", "{" + join(xs) + "}");
  if (xs.empty()) return conclude(std::move(S.cert));
  if (xs != std::vector<long>{0}) return stop(std::move(S.cert), "x_A1 not forced to 0");
  cfg.x_A1 = 0;

  std::vector<long> q2;
  const auto& pts = S.c.basket.points();
  for (size_t k = 0; k < pts.size(); ++k)
    if (pts[k].r == 2) q2.push_back(static_cast<long>(k));
  if (q2.size() != 4) return stop(std::move(S.cert), "expected four points (2,1)");

  auto parities = [&](long s) {
    auto b = residue_term_builder(35, s, S.data(cfg));
    std::set<std::vector<long>> pats;
    for (const auto& sol : all_integral_solutions(b.system)) {
      std::vector<long> which;
      auto idx = indices_of(b.system, S.c.basket, sol, which);
      std::vector<long> pat;
      for (long k : q2)
        for (size_t t = 0; t < which.size(); ++t)
          if (which[t] == k) pat.push_back(idx[t] % 2);
      pats.insert(pat);
    }
    std::string out;
    for (const auto& p : pats) out += "(" + join(p) + ")";
    S.cert.mechanical(describe("parities of i_{f(" + std::to_string(s) + "A),Q_i}, r' = 35", b),
                      out.empty() ? "none" : out, b.system.domain_size());
    return pats;
  };
  auto all_equal = [](const std::vector<long>& p) { return std::all_of(p.begin(), p.end(), [&](long v) { return v == p[0]; }); };

  auto p1 = parities(1), p4 = parities(4), p5 = parities(5);
  bool two_odd = !p1.empty() && std::all_of(p1.begin(), p1.end(), [&](const std::vector<long>& p) { return !all_equal(p); });
  bool eq45 = std::all_of(p4.begin(), p4.end(), all_equal) && std::all_of(p5.begin(), p5.end(), all_equal);
  S.cert.mechanical("shape of the parity patterns", std::string(two_odd ? "s = 1 never all equal" : "s = 1 may be all equal") +
                                                        "; " + (eq45 ? "s = 4, 5 always all equal" : "s = 4, 5 not always equal"));
  S.cert.cited("over the open set where 4A is Cartier, the Weil pullback is additive: f(5A) = f(A) + f(4A) there",
               "f^{⌊*⌋}(5A)=f^{⌊*⌋}(A)+f^{⌊*⌋}(4A) holds",
               "G = f(5A) - f(A) - f(4A) is supported over crepant points");
  S.cert.cited("a non-Gorenstein crepant point has Gorenstein index 2, and then the indices at the four (2,1) points agree mod 2",
               "the Gorenstein index r_P at P is 2", "i_{G,Q1} = i_{G,Q2} = i_{G,Q3} = i_{G,Q4} mod 2");
  bool contra = two_odd && eq45;
  S.cert.mechanical("i_{f(A)} = i_{f(5A)} - i_{f(4A)} - i_G mod 2 is all equal",
                    contra ? "contradicts the s = 1 patterns" : "no contradiction");
  if (!contra) return stop(std::move(S.cert), "parity argument inconclusive");
  return conclude(std::move(S.cert));
}

}  // namespace

Verdict run_group_b_script(long case_id) { return run_group_b_script(case_id, candidate_for_case(case_id)); }

Verdict run_group_b_script(long case_id, const Candidate& c) {
  static const std::set<long> kB = {10, 20, 23, 24, 27, 32, 33, 35, 36};
  if (!kB.count(case_id)) throw InvalidInput("no Group B script for case " + std::to_string(case_id));
  Script S(case_id, c);
  switch (case_id) {
    case 10: return script_10(S);
    case 20: return script_20(S);
    case 23: return script_23(S);
    case 24: return script_24(S);
    case 27: return script_27(S);
    case 32:
    case 33: return script_32_33(S);
    case 35: return script_35(S);
    case 36: return script_36(S);
  }
  throw std::logic_error("unreachable");
}

}  // namespace qfano
