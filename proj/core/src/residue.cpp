#include "qfano/residue.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace qfano {

Rational UnknownTerm::value(long u) const {
  if (shape == TermShape::Quadratic) return coeff * Rational(u * (modulus - u), 2 * modulus);
  return coeff * Rational(u, modulus);
}

Rational ResidueConstraintSystem::fixed_total() const {
  Rational t = constant;
  for (const auto& f : fixed_terms) t += f.value;
  return t;
}

Integer ResidueConstraintSystem::domain_size() const {
  Integer n = 1;
  for (const auto& u : unknown_terms) n *= u.modulus;
  return n;
}

Rational ResidueConstraintSystem::evaluate(const std::vector<long>& assignment) const {
  if (assignment.size() != unknown_terms.size()) throw InvalidInput("assignment size mismatch");
  Rational t = fixed_total();
  for (size_t i = 0; i < assignment.size(); ++i) t += unknown_terms[i].value(assignment[i]);
  return t;
}

ResidueConstraintSystem ResidueConstraintSystem::substitute(const std::string& label, long value) const {
  ResidueConstraintSystem out;
  out.constant = constant;
  out.fixed_terms = fixed_terms;
  for (const auto& u : unknown_terms) {
    if (u.label == label)
      out.fixed_terms.push_back({u.value(residue(value, u.modulus)), label + "=" + std::to_string(value)});
    else
      out.unknown_terms.push_back(u);
  }
  return out;
}

std::string ResidueConstraintSystem::str() const {
  std::ostringstream os;
  os << fixed_total();
  for (const auto& u : unknown_terms) {
    os << (u.coeff.sign() < 0 ? " - " : " + ") << abs(u.coeff);
    if (u.shape == TermShape::Quadratic)
      os << "*u(" << u.modulus << "-u)/" << 2 * u.modulus;
    else
      os << "*u/" << u.modulus;
    os << " [" << u.label << "]";
  }
  return os.str();
}

namespace {

void check_cap(const ResidueConstraintSystem& sys, const Integer& cap) {
  for (const auto& u : sys.unknown_terms)
    if (u.modulus < 1) throw InvalidInput("unknown term with modulus < 1");
  Integer n = sys.domain_size();
  if (n > cap)
    throw DomainTooLarge("residue domain " + n.get_str() + " exceeds cap " + cap.get_str());
}

}  // namespace

SolveResult exists_integral_solution(const ResidueConstraintSystem& sys, const Integer& cap) {
  check_cap(sys, cap);
  SolveResult res;
  res.domain_size = sys.domain_size();

  // layers[k] maps each reachable fractional part after k terms to the
  // (previous fractional part, residue) that first reached it.
  using Layer = std::map<Rational, std::pair<Rational, long>>;
  std::vector<Layer> layers(1);
  layers[0].emplace(sys.fixed_total().frac(), std::make_pair(Rational(), -1L));
  for (const auto& term : sys.unknown_terms) {
    std::vector<Rational> steps(term.modulus);
    for (long u = 0; u < term.modulus; ++u) steps[u] = term.value(u).frac();
    Layer next;
    for (const auto& [f, _] : layers.back())
      for (long u = 0; u < term.modulus; ++u) next.emplace((f + steps[u]).frac(), std::make_pair(f, u));
    layers.push_back(std::move(next));
  }

  auto hit = layers.back().find(Rational(0));
  if (hit == layers.back().end()) return res;
  res.solvable = true;
  res.witness.assign(sys.unknown_terms.size(), 0);
  Rational cur = Rational(0);
  for (size_t k = sys.unknown_terms.size(); k > 0; --k) {
    const auto& [prev, u] = layers[k].at(cur);
    res.witness[k - 1] = u;
    cur = prev;
  }
  return res;
}

namespace {

// Every term value scaled by the common denominator L and reduced mod L, so
// the odometers below add machine words. nullopt when L is too large.
struct ScaledTables {
  long L = 1;
  long base = 0;
  std::vector<std::vector<long>> values;
};

std::optional<ScaledTables> scale(const ResidueConstraintSystem& sys) {
  Integer L = sys.fixed_total().den();
  std::vector<std::vector<Rational>> raw;
  for (const auto& t : sys.unknown_terms) {
    raw.emplace_back();
    for (long u = 0; u < t.modulus; ++u) {
      raw.back().push_back(t.value(u));
      L = lcm(L, raw.back().back().den());
    }
  }
  if (L > Integer(1L << 40)) return std::nullopt;
  auto reduce = [&](const Rational& v) {
    Integer n = v.num() * (L / v.den());
    return residue(n, L).get_si();
  };
  ScaledTables out;
  out.L = L.get_si();
  out.base = reduce(sys.fixed_total());
  for (const auto& row : raw) {
    out.values.emplace_back();
    for (const auto& v : row) out.values.back().push_back(reduce(v));
  }
  return out;
}

// Visits assignments in odometer order; `first_fastest` picks which end turns.
template <class Visit>
void odometer(const ResidueConstraintSystem& sys, bool first_fastest, Visit visit) {
  size_t n = sys.unknown_terms.size();
  std::vector<long> a(n, 0);
  auto tables = scale(sys);
  Rational base = sys.fixed_total();
  while (true) {
    bool integral;
    if (tables) {
      long t = tables->base;
      for (size_t i = 0; i < n; ++i) t += tables->values[i][a[i]];
      integral = t % tables->L == 0;
    } else {
      Rational t = base;
      for (size_t i = 0; i < n; ++i) t += sys.unknown_terms[i].value(a[i]);
      integral = t.is_integer();
    }
    if (integral && !visit(a)) return;
    size_t k = 0;
    for (; k < n; ++k) {
      size_t i = first_fastest ? k : n - 1 - k;
      if (++a[i] < sys.unknown_terms[i].modulus) break;
      a[i] = 0;
    }
    if (k == n) return;
  }
}

}  // namespace

SolveResult enumerate_directly(const ResidueConstraintSystem& sys, const Integer& cap) {
  check_cap(sys, cap);
  SolveResult res;
  res.domain_size = sys.domain_size();
  odometer(sys, true, [&](const std::vector<long>& a) {
    res.solvable = true;
    res.witness = a;
    return false;
  });
  return res;
}

std::vector<std::vector<long>> all_integral_solutions(const ResidueConstraintSystem& sys,
                                                      const Integer& cap) {
  check_cap(sys, cap);
  std::vector<std::vector<long>> out;
  odometer(sys, false, [&](const std::vector<long>& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace qfano
