#include "qfano/rr.hpp"

namespace qfano {

namespace {

bool unit_irrelevant(long j) { return j == 2 || j == 3 || j == 4 || j == 6; }

long effective_unit(const CrepantCurve& c) {
  if (c.unit) {
    if (gcd(*c.unit, c.j) != 1) throw InvalidInput("curve unit not coprime to j");
    return *c.unit;
  }
  if (unit_irrelevant(c.j)) return 1;
  throw InvalidInput("unknown generator unit for " + curve_name(c.j));
}

}  // namespace

std::string curve_name(long j) { return "A" + std::to_string(j - 1); }

Rational c_orbifold(long r, long b, long i) {
  OrbifoldPoint::make(r, b);
  if (i < 0) throw InvalidInput("local index must be nonnegative");
  Rational c = -Rational(i * (r * r - 1), 12 * r);
  for (long k = 0; k < i; ++k) c += sigma_pair(k * b, r);
  return c;
}

Rational c_curve(long j, long unit, long s) {
  if (j < 2 || gcd(unit, j) != 1) throw InvalidInput("invalid crepant curve data");
  return -sigma_pair(s * unit, j);
}

Rational h0_sA(long q, const Rational& A2mK, const CurveConfig& cfg, const Basket& B,
               const LocalIndexAssignment& idx, long s) {
  if (s <= 0 || s >= q) throw InvalidInput("h0_sA needs 0 < s < q");
  if (idx.size() != B.size()) throw InvalidInput("one local index per basket point");
  if (cfg.curves_divide || !cfg.x_A1) throw InvalidInput("h0_sA needs a fully known curve configuration");
  Rational rX = gorenstein_index(B);
  Rational h = Rational(s * s, 2) * A2mK + 2;
  for (const auto& c : cfg.curves) h += Rational(c.degree) / rX * c_curve(c.j, effective_unit(c), s);
  h += Rational(*cfg.x_A1) / rX * c_curve(2, 1, s);
  for (size_t k = 0; k < B.size(); ++k) {
    const auto& p = B.points()[k];
    h -= sigma_pair(idx[k] * p.b, p.r);
  }
  return h;
}

BuiltSystem residue_term_builder(long r_prime, long s, const RRData& data) {
  if (r_prime < 1) throw InvalidInput("r' must be positive");
  BuiltSystem out;
  auto& sys = out.system;
  long rX = gorenstein_index(data.basket);
  Rational A2mK = Rational(data.rXc13, rX * data.q * data.q);
  sys.constant = Rational(r_prime * s * s, 2) * A2mK;

  const auto& cfg = data.cfg;
  if (cfg.curves_divide) {
    if (s % *cfg.curves_divide != 0)
      throw InvalidInput("undetermined curves need s divisible by " + std::to_string(*cfg.curves_divide));
    out.dropped.push_back("all crepant curve terms: every j divides " +
                          std::to_string(*cfg.curves_divide) + " | s");
  } else {
    for (size_t i = 0; i < cfg.curves.size(); ++i) {
      const auto& c = cfg.curves[i];
      std::string tag = curve_name(c.j) + " (degree " + std::to_string(c.degree) + ")";
      Rational k = Rational(r_prime * c.degree, rX);
      long need = c.j % 2 == 1 ? c.j : 2 * c.j;
      if (data.drop_curve_terms && k.is_integer() && Integer(k.num() % need) == 0) {
        out.dropped.push_back(tag + ": -r'K.C = " + k.str() + " divisible by " + std::to_string(need));
        continue;
      }
      if (data.drop_curve_terms && s % c.j == 0) {
        out.dropped.push_back(tag + ": s divisible by j");
        continue;
      }
      if (c.unit) {
        sys.fixed_terms.push_back({k * c_curve(c.j, effective_unit(c), s), tag});
      } else {
        sys.unknown_terms.push_back({-k, c.j, TermShape::Quadratic, "C" + std::to_string(i) + ":" + tag});
      }
    }
    // A_1 aggregate: (x / r_X) c_C(sA) = -x (s mod 2) / (4 r_X).
    if (cfg.x_A1 != std::optional<long>(0) || cfg.a1_allowed) {
      Rational per_x = Rational(r_prime, rX) * c_curve(2, 1, s);
      if (per_x.is_zero()) {
        out.dropped.push_back("A1 aggregate: s even");
      } else if (per_x.is_integer()) {
        out.dropped.push_back("A1 aggregate: -r'K.C per unit of x_A1 is " + per_x.str());
      } else if (cfg.x_A1) {
        sys.fixed_terms.push_back({per_x * *cfg.x_A1, "A1 aggregate x_A1=" + std::to_string(*cfg.x_A1)});
      } else {
        long m = per_x.den().get_si();
        sys.unknown_terms.push_back({per_x * m, m, TermShape::Linear, "x_A1"});
      }
    }
  }

  for (size_t k = 0; k < data.basket.size(); ++k) {
    const auto& p = data.basket.points()[k];
    std::string tag = "(" + std::to_string(p.r) + "," + std::to_string(p.b) + ")#" + std::to_string(k);
    long need = p.r % 2 == 1 ? p.r : 2 * p.r;
    if (r_prime % need == 0) {
      out.dropped.push_back("point " + tag + ": " + std::to_string(need) + " | r'");
      continue;
    }
    sys.unknown_terms.push_back({Rational(-r_prime), p.r, TermShape::Quadratic, "Q" + std::to_string(k) + ":" + tag});
  }
  return out;
}

Rational km_bound(long l, long r1, long p, long q) {
  if (l == 1 && r1 == 3) return 3;
  if (l == 2 && r1 == 1) return Rational(16, 5);
  Rational qq = Rational(q) * q;
  if (l == 2 && r1 == 2) return 4 * qq / (Rational(p) * (4 * q - 3 * p));
  if (l == 3 && r1 == 1) return 4 * qq / (Rational(-4 * p * p + 6 * p * q) - qq);
  throw InvalidInput("km_bound: (l, r1) must be one of (1,3), (2,1), (2,2), (3,1)");
}

Rational nabla(long q, long rXc13, long rXc2c1) {
  if (q < 1) throw InvalidInput("nabla needs q >= 1");
  Rational qq = Rational(q) * q;
  return Rational(rXc2c1) - (qq + 2 * q - 4) / (4 * qq) * rXc13;
}

Rational delta_lower_bound(const CurveConfig& cfg) {
  if (cfg.curves_divide || !cfg.x_A1) throw InvalidInput("delta_lower_bound needs known degrees");
  Rational d = Rational(3, 2) * *cfg.x_A1;
  for (const auto& c : cfg.curves) d += (Rational(c.j) - Rational(1, c.j)) * c.degree;
  return d;
}

}  // namespace qfano
