#pragma once

#include <string>
#include <vector>

#include "qfano/arith.hpp"

namespace qfano {

enum class TermShape {
  Quadratic,  // coeff * u (m - u) / (2m)
  Linear,     // coeff * u / m
};

struct UnknownTerm {
  Rational coeff;
  long modulus;
  TermShape shape;
  std::string label;

  Rational value(long u) const;
};

struct FixedTerm {
  Rational value;
  std::string label;
};

// constant + sum(fixed) + sum(unknown_k(u_k)), u_k ranging over [0, m_k).
// The question is always whether some assignment makes the total integral.
struct ResidueConstraintSystem {
  Rational constant;
  std::vector<FixedTerm> fixed_terms;
  std::vector<UnknownTerm> unknown_terms;

  Rational fixed_total() const;  // constant included
  Integer domain_size() const;
  Rational evaluate(const std::vector<long>& assignment) const;
  // Replaces every unknown carrying `label` by the fixed value it takes at
  // integer parameter `value` (reduced mod its modulus).
  ResidueConstraintSystem substitute(const std::string& label, long value) const;
  std::string str() const;
};

struct SolveResult {
  bool solvable = false;
  std::vector<long> witness;  // one residue per unknown term when solvable
  Integer domain_size = 1;
};

// Raised when a system's assignment space exceeds the configured cap.
class DomainTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const Integer kDefaultDomainCap = Integer(1000000000);

// Exhaustive: folds the terms one at a time over the set of reachable
// fractional parts, so cost grows with the common denominator rather than
// the product of moduli. Witnesses are recovered by backtracking.
SolveResult exists_integral_solution(const ResidueConstraintSystem& sys,
                                     const Integer& cap = kDefaultDomainCap);

// Plain product enumeration, last unknown varying slowest. Independent
// reference path for the solver above.
SolveResult enumerate_directly(const ResidueConstraintSystem& sys,
                               const Integer& cap = kDefaultDomainCap);

// Every satisfying assignment, in lexicographic order.
std::vector<std::vector<long>> all_integral_solutions(const ResidueConstraintSystem& sys,
                                                      const Integer& cap = kDefaultDomainCap);

}  // namespace qfano
