#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfano/arith.hpp"
#include "qfano/basket.hpp"

namespace qfano {

struct Candidate {
  Basket basket;
  long q = 0;
  long J_A = 1;
  long rX = 1;
  long rXc13 = 0;
  long rXc2c1 = 0;
  std::vector<long> prime_powers;
  std::vector<long> lb_values;
  Rational nabla;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Canonical order: basket, q, J_A, then rXc13.
bool candidate_less(const Candidate& a, const Candidate& b);

enum class SearchMode { Greater, Equal };

struct Step1Item {
  Multiset R;
  long rXc2c1;
};

struct Precursor {
  Basket basket;
  long q;
  long J_A;
  long rXc13;
  long rXc2c1;
};

// Largest q with q^2 + 2q - 4 <= 4 q rXc2c1. This follows from the test
// inequality together with rXc13 >= q^2 / J_A >= q.
long q_upper_bound(long rXc2c1);

std::vector<Step1Item> step1(long q_min);

// With prune set, divisors J of q whose prime-power terms already exceed
// the largest attainable nabla (m = 1) are skipped; Step 3 still decides.
std::vector<Precursor> step2(const Multiset& R, long rXc2c1, long q_min, SearchMode mode,
                             bool prune = false);

std::optional<Candidate> step3(const Precursor& pre);

std::vector<Candidate> run_search(long q_min, SearchMode mode, int workers = 1);

// Re-derives every Candidate invariant from scratch. Empty when all hold.
std::vector<std::string> check_candidate(const Candidate& c);

}  // namespace qfano
