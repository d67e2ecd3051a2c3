#include "qfano/eliminate.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "qfano/lb.hpp"

namespace qfano {

namespace {

struct Row {
  long id;
  std::vector<std::pair<long, long>> points;
  long q, J_A, rXc13;
  CaseGroup group;
};

using G = CaseGroup;

// (r, b) repeated as often as the point occurs in the basket.
const std::vector<Row> kRows = {
    {1, {{5, 1}}, 84, 84, 84, G::A},
    {2, {{3, 1}, {3, 1}}, 70, 70, 70, G::A},
    {3, {{3, 1}, {11, 3}}, 70, 10, 490, G::CPlus},
    {4, {{3, 1}, {11, 5}}, 80, 10, 640, G::CMinus},
    {5, {{5, 1}, {7, 2}}, 72, 18, 288, G::A},
    {6, {{5, 1}, {11, 1}}, 72, 6, 864, G::CPlus},
    {7, {{5, 1}, {11, 2}}, 78, 6, 1014, G::CMinus},
    {8, {{5, 2}, {11, 3}}, 84, 6, 1176, G::CMinus},
    {9, {{2, 1}, {2, 1}, {3, 1}}, 70, 70, 70, G::A},
    {10, {{2, 1}, {2, 1}, {9, 4}}, 70, 10, 490, G::B},
    {11, {{2, 1}, {5, 2}, {11, 5}}, 69, 3, 1587, G::CPlus},
    {12, {{3, 1}, {5, 1}, {11, 1}}, 82, 2, 3362, G::CMinus},
    {13, {{3, 1}, {5, 1}, {11, 4}}, 68, 2, 2312, G::CPlus},
    {14, {{3, 1}, {5, 2}, {11, 2}}, 76, 2, 2888, G::CMinus},
    {15, {{3, 1}, {5, 2}, {11, 5}}, 74, 2, 2738, G::CMinus},
    {16, {{3, 1}, {6, 1}, {7, 2}}, 75, 15, 375, G::A},
    {17, {{4, 1}, {5, 1}, {5, 2}}, 75, 15, 375, G::A},
    {18, {{5, 1}, {5, 2}, {7, 3}}, 90, 30, 270, G::A},
    {19, {{2, 1}, {2, 1}, {3, 1}, {5, 2}}, 98, 14, 686, G::A},
    {20, {{2, 1}, {3, 1}, {5, 1}, {6, 1}}, 72, 6, 864, G::B},
    {21, {{2, 1}, {3, 1}, {5, 1}, {11, 2}}, 67, 1, 4489, G::CPlus},
    {22, {{2, 1}, {3, 1}, {5, 2}, {11, 1}}, 71, 1, 5041, G::CPlus},
    {23, {{2, 1}, {4, 1}, {4, 1}, {7, 2}}, 72, 12, 432, G::B},
    {24, {{3, 1}, {3, 1}, {3, 1}, {5, 1}}, 72, 12, 432, G::B},
    {25, {{3, 1}, {3, 1}, {3, 1}, {5, 2}}, 84, 42, 168, G::A},
    {26, {{3, 1}, {3, 1}, {3, 1}, {7, 1}}, 90, 30, 270, G::A},
    {27, {{3, 1}, {5, 2}, {6, 1}, {7, 1}}, 69, 3, 1587, G::B},
    {28, {{3, 1}, {5, 2}, {6, 1}, {7, 3}}, 81, 3, 2187, G::A},
    {29, {{2, 1}, {2, 1}, {2, 1}, {2, 1}, {5, 1}}, 84, 42, 168, G::A},
    {30, {{2, 1}, {2, 1}, {2, 1}, {2, 1}, {7, 1}}, 72, 12, 432, G::A},
    {31, {{2, 1}, {2, 1}, {2, 1}, {2, 1}, {7, 1}}, 80, 20, 320, G::A},
    {32, {{3, 1}, {3, 1}, {3, 1}, {5, 1}, {7, 1}}, 78, 6, 1014, G::B},
    {33, {{3, 1}, {3, 1}, {3, 1}, {5, 1}, {7, 2}}, 72, 6, 864, G::B},
    {34, {{3, 1}, {3, 1}, {3, 1}, {5, 1}, {7, 2}}, 72, 12, 864, G::A},
    {35, {{2, 1}, {2, 1}, {2, 1}, {2, 1}, {5, 1}, {7, 3}}, 68, 4, 1156, G::B},
    {36, {{2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {3, 1}}, 70, 70, 70, G::B},
};

std::vector<CaseInfo> build_catalog() {
  std::vector<CaseInfo> out;
  for (const auto& row : kRows) {
    std::vector<OrbifoldPoint> pts;
    for (auto [r, b] : row.points) pts.push_back(OrbifoldPoint::make(r, b));
    out.push_back({row.id, Basket(pts), row.q, row.J_A, row.rXc13, row.group});
  }
  return out;
}

std::string config_str(const CurveConfig& cfg) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : cfg.curves) {
    os << (first ? "" : ", ") << curve_name(c.j) << " degree " << c.degree;
    first = false;
  }
  if (cfg.a1_allowed || cfg.x_A1 != std::optional<long>(0)) {
    os << (first ? "" : ", ") << "A1 aggregate";
    if (cfg.x_A1) os << " x_A1=" << *cfg.x_A1;
    first = false;
  }
  if (first) os << "no crepant curves";
  return os.str();
}

Rational weight(long j) { return Rational(j) - Rational(1, j); }

}  // namespace

std::string to_string(CaseGroup g) {
  switch (g) {
    case CaseGroup::A: return "A";
    case CaseGroup::B: return "B";
    case CaseGroup::CMinus: return "C-";
    case CaseGroup::CPlus: return "C+";
  }
  return "?";
}

const std::vector<CaseInfo>& case_catalog() {
  static const std::vector<CaseInfo> catalog = build_catalog();
  return catalog;
}

const CaseInfo& case_info(long id) {
  for (const auto& c : case_catalog())
    if (c.id == id) return c;
  throw InvalidInput("unknown case id " + std::to_string(id));
}

std::vector<long> case_ids(CaseGroup g) {
  std::vector<long> out;
  for (const auto& c : case_catalog())
    if (c.group == g) out.push_back(c.id);
  return out;
}

std::optional<long> identify_case(const Candidate& c) {
  for (const auto& info : case_catalog())
    if (info.basket == c.basket && info.q == c.q && info.J_A == c.J_A && info.rXc13 == c.rXc13) return info.id;
  return std::nullopt;
}

Candidate candidate_for_case(long id) {
  const auto& info = case_info(id);
  Rational c2 = rX_c2c1(info.basket.R());
  Precursor pre{info.basket, info.q, info.J_A, info.rXc13, c2.to_long()};
  auto c = step3(pre);
  if (!c) throw std::logic_error("catalogued case " + std::to_string(id) + " fails the search test");
  return *c;
}

CurveDetermination determine_curves(const Candidate& c) {
  if (c.J_A == 1) return CurveConfig{};
  if (c.J_A == 2) {
    CurveConfig cfg;
    cfg.x_A1 = std::nullopt;
    cfg.a1_allowed = true;
    return cfg;
  }
  LBContext ctx(c.basket.R());
  long a0 = p_adic_valuation(c.J_A, 2);
  std::vector<long> odd;  // odd prime powers
  long p1 = 0;
  for (long pa : prime_power_factors(c.J_A)) {
    if (pa % 2 == 0) continue;
    odd.push_back(pa);
    long p = 3;
    while (pa % p != 0) p += 2;
    if (p1 == 0 || p < p1) p1 = p;
  }

  Rational S;
  std::vector<long> used;
  for (long pa : odd) used.push_back(pa);
  if (a0 >= 2) used.push_back(1L << a0);
  for (long pa : used) S += weight(pa) * lb(ctx, pa);
  long extra = a0 <= 1 ? p1 : (odd.empty() ? 4 : std::min(4L, p1));
  if (extra == 0) return Undetermined{"no odd prime power in J_A"};
  S += weight(extra) * lb(ctx, extra);
  if (!(c.nabla < S))
    return Undetermined{"nabla = " + c.nabla.str() + " >= " + S.str() + ": one curve per prime power is not forced"};

  std::sort(used.begin(), used.end());
  CurveConfig cfg;
  for (long pa : used) cfg.curves.push_back({pa, lb(ctx, pa), std::nullopt});
  cfg.a1_allowed = a0 >= 1;
  cfg.x_A1 = cfg.a1_allowed ? std::nullopt : std::optional<long>(0);
  return cfg;
}

std::map<long, long> curve_type_budget(const Candidate& c) {
  LBContext ctx(c.basket.R());
  std::vector<long> js;
  for (long d : divisors(c.J_A))
    if (d >= 2) js.push_back(d);
  std::vector<Rational> w;
  for (long j : js) w.push_back(weight(j) * lb(ctx, j));
  auto pps = prime_power_factors(c.J_A);

  std::map<long, long> out;
  size_t n = js.size();
  if (n > 20) throw InvalidInput("J_A has too many divisors for the budget enumeration");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Rational cost;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) cost += w[i];
    if (cost > c.nabla) continue;
    bool covered = std::all_of(pps.begin(), pps.end(), [&](long pa) {
      for (size_t i = 0; i < n; ++i)
        if ((mask >> i & 1) && js[i] % pa == 0) return true;
      return false;
    });
    if (!covered) continue;
    for (size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      long y = ((c.nabla - cost + w[i]) / w[i]).floor().get_si();
      out[js[i]] = std::max(out[js[i]], y);
    }
  }
  return out;
}

Verdict eliminate_group_a(const Candidate& c) {
  EliminationCertificate cert;
  cert.case_id = identify_case(c).value_or(0);
  cert.group = "A";
  auto det = determine_curves(c);
  if (auto* u = std::get_if<Undetermined>(&det)) {
    cert.mechanical("determine crepant curves from J_A = " + std::to_string(c.J_A) + " and LB", u->reason);
    return stop(std::move(cert), "curve configuration undetermined");
  }
  const auto& cfg = std::get<CurveConfig>(det);
  cert.mechanical("determine crepant curves from J_A = " + std::to_string(c.J_A) + " and LB", config_str(cfg));

  RRData data{c.basket, c.q, c.rXc13, cfg, false};
  auto built = residue_term_builder(2 * c.rX, 2, data);
  std::string desc = "integrality of the canonical part for D = 2A with r' = 2r_X = " +
                     std::to_string(2 * c.rX) + ": " + built.system.str();
  for (const auto& d : built.dropped) desc += "; dropped " + d;
  auto res = exists_integral_solution(built.system);
  if (res.solvable) {
    cert.mechanical(desc, "solvable", res.domain_size);
    return stop(std::move(cert), "residue system has an integral assignment", res.witness);
  }
  cert.mechanical(desc, "no integral value over " + res.domain_size.get_str() + " assignments", res.domain_size);
  return conclude(std::move(cert));
}

Verdict eliminate_case(long case_id) { return eliminate_candidate(candidate_for_case(case_id)); }

Verdict eliminate_candidate(const Candidate& c) {
  auto id = identify_case(c);
  if (!id) {
    EliminationCertificate cert;
    cert.group = "?";
    cert.mechanical("match against the catalogued cases", "no matching case");
    return stop(std::move(cert), "candidate is not a catalogued case");
  }
  switch (case_info(*id).group) {
    case CaseGroup::A: return eliminate_group_a(c);
    case CaseGroup::B: return run_group_b_script(*id, c);
    case CaseGroup::CMinus: return eliminate_group_c_minus(*id, c);
    case CaseGroup::CPlus: return eliminate_group_c_plus(*id, c);
  }
  throw std::logic_error("unreachable");
}

PipelineReport run_pipeline_on(const std::vector<Candidate>& candidates, int workers) {
  PipelineReport rep;
  rep.candidates = static_cast<long>(candidates.size());
  std::vector<Verdict> verdicts(candidates.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < candidates.size();) {
      try {
        verdicts[i] = eliminate_candidate(candidates[i]);
      } catch (const std::exception& e) {
        EliminationCertificate cert;
        cert.case_id = identify_case(candidates[i]).value_or(0);
        cert.group = "?";
        verdicts[i] = stop(std::move(cert), std::string("eliminator failed: ") + e.what());
      }
    }
  };
  int n = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::stable_sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) {
    long x = a.certificate.case_id, y = b.certificate.case_id;
    if ((x == 0) != (y == 0)) return y == 0;
    return x < y;
  });
  for (size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    if (v.eliminated && v.certificate.has_contradiction()) {
      ++rep.eliminated;
      if (v.certificate.fully_mechanical())
        ++rep.fully_mechanical;
      else
        ++rep.with_cited_lemmas;
    } else {
      rep.survivors.push_back(static_cast<long>(i));
    }
  }
  rep.verdicts = std::move(verdicts);
  return rep;
}

PipelineReport run_full_pipeline(int workers) {
  return run_pipeline_on(run_search(66, SearchMode::Greater, workers), workers);
}

bool replays(const Verdict& v) {
  if (v.certificate.case_id == 0) return false;
  return eliminate_case(v.certificate.case_id) == v;
}

}  // namespace qfano
