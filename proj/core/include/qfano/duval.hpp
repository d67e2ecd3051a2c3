#pragma once

#include <string>
#include <vector>

#include "qfano/arith.hpp"

namespace qfano {

enum class DuValKind { A, D, E };

struct DuValType {
  DuValKind kind;
  int rank;

  static DuValType A(int n);
  static DuValType D(int m);
  static DuValType E(int n);
  // "A10", "D5", "E7"; throws InvalidInput on anything else.
  static DuValType parse(const std::string& name);

  std::string name() const;
  friend bool operator==(const DuValType&, const DuValType&) = default;
};

struct DuValInvariants {
  long e;
  long e_prime;
  long g;
  long j;
  friend bool operator==(const DuValInvariants&, const DuValInvariants&) = default;
};

using IntMatrix = std::vector<std::vector<long>>;

// Intersection numbers of the strict transform with each exceptional curve.
// Classes are the cokernel of the Cartan matrix.
struct WeilClass {
  std::vector<long> pairing;
};

DuValInvariants invariants(const DuValType& t);

// Intersection matrix of the exceptional curves: -2 on the diagonal, 1 for
// each Dynkin edge. D_m is the chain 1..m-2 with m-1 and m attached to m-2;
// E_n is the chain 1..n-1 with node n attached to node 3.
IntMatrix cartan_matrix(const DuValType& t);

Integer determinant(const IntMatrix& m);

// Invariant factors (> 1) of the Smith normal form.
std::vector<Integer> class_group(const DuValType& t);

// Fractional exceptional multiplicities -M^{-1} * pairing.
std::vector<Rational> multiplicities(const DuValType& t, const WeilClass& c);

bool has_integral_multiplicity(const DuValType& t, const WeilClass& c);

// One representative per class, found by closing {0} under adding unit
// pairings. The zero class comes first.
std::vector<WeilClass> class_representatives(const DuValType& t);

}  // namespace qfano
