#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfano/arith.hpp"
#include "qfano/basket.hpp"
#include "qfano/residue.hpp"

namespace qfano {

// A crepant curve of type A_{j-1}; degree is -r_X K.C.
struct CrepantCurve {
  long j;
  long degree;
  std::optional<long> unit;  // generator residue mod j, when known

  friend bool operator==(const CrepantCurve&, const CrepantCurve&) = default;
};

struct CurveConfig {
  std::vector<CrepantCurve> curves;  // j >= 3
  std::optional<long> x_A1 = 0;      // nullopt: symbolic
  bool a1_allowed = false;
  // Set when the curves are not known individually but every j_C is known
  // to divide this number. Only multiples of it may then be evaluated.
  std::optional<long> curves_divide;

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;
};

// Position in basket -> local index i at that point.
using LocalIndexAssignment = std::vector<long>;

Rational c_orbifold(long r, long b, long i);
Rational c_curve(long j, long unit, long s);

// h^0(sA) for 0 < s < q. Curves of type A_1, A_2, A_3, A_5 may leave their
// unit unset: F_j(s u) does not depend on it.
Rational h0_sA(long q, const Rational& A2mK, const CurveConfig& cfg, const Basket& B,
               const LocalIndexAssignment& idx, long s);

// Numerical data a residue system is built from.
struct RRData {
  Basket basket;
  long q = 1;
  long rXc13 = 0;
  CurveConfig cfg;
  // When false, curve terms are kept even if the r' rule makes them integral.
  bool drop_curve_terms = true;
};

struct BuiltSystem {
  ResidueConstraintSystem system;
  std::vector<std::string> dropped;  // terms removed as integral, with reason
};

// -(r'/2) D^2 K + sum (-r' K.C) c_C(D) - sum r' u(r-u)/(2r) for D = sA.
BuiltSystem residue_term_builder(long r_prime, long s, const RRData& data);

// (l, r1) in {(1,3), (2,1), (2,2), (3,1)}.
Rational km_bound(long l, long r1, long p, long q);

Rational nabla(long q, long rXc13, long rXc2c1);

// sum (j - 1/j) deg + (3/2) x_A1. Throws on symbolic data.
Rational delta_lower_bound(const CurveConfig& cfg);

std::string curve_name(long j);  // "A4" for j = 5

}  // namespace qfano
