#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qfano/basket.hpp"
#include "qfano/certificate.hpp"
#include "qfano/rr.hpp"
#include "qfano/search.hpp"

namespace qfano {

enum class CaseGroup { A, B, CMinus, CPlus };

std::string to_string(CaseGroup g);

// One row of the candidate table with the proof group it is routed to.
// The routing is data taken from the table's reference column.
struct CaseInfo {
  long id;
  Basket basket;
  long q;
  long J_A;
  long rXc13;
  CaseGroup group;
};

const std::vector<CaseInfo>& case_catalog();
const CaseInfo& case_info(long id);  // InvalidInput for unknown ids
std::vector<long> case_ids(CaseGroup g);

// Matches on (basket, q, J_A, r_X c1^3).
std::optional<long> identify_case(const Candidate& c);
Candidate candidate_for_case(long id);

struct Undetermined {
  std::string reason;
};

using CurveDetermination = std::variant<CurveConfig, Undetermined>;

// Crepant curve configuration for J_A > 2 when the budget inequality forces
// one curve per prime power; J_A = 1 and J_A = 2 are settled directly.
CurveDetermination determine_curves(const Candidate& c);

// Aggregate curve budget: the j | J_A (j >= 2) that can occur in some
// configuration covering every prime power of J_A within nabla, and for
// each j the largest multiple y of LB(j) its total degree can reach.
std::map<long, long> curve_type_budget(const Candidate& c);

Verdict eliminate_group_a(const Candidate& c);

Verdict run_group_b_script(long case_id);
Verdict run_group_b_script(long case_id, const Candidate& c);

// h^0(sA) for Group C, 0 < s < 66.
long group_c_closed_form(long s);

struct GroupCDerivation {
  EliminationCertificate steps;
  // Raw solution sets before the sign normalization.
  std::vector<std::vector<long>> x_solutions;  // (x2, x3, x5, x11)
  std::vector<std::vector<long>> y_solutions;  // (y3, y5, y11) after normalization
  std::set<long> x_A1_values;
  long r0 = 1;  // type of the non-A1 crepant curve, 1 when absent
  bool closed_form_matches = false;
};

GroupCDerivation solve_group_c_residues(const Candidate& c);

// values[s - 1] = h^0(s); h^0(0) = 1 and h^0(t) = 0 for t < 0.
std::set<long> movable_thresholds(const std::vector<long>& values);

// All multiplicity vectors m with sum m_i parts_i = n.
std::vector<std::vector<long>> decompose(long n, const std::vector<long>& parts);

// Raised when the 16/5 alternative is not excluded.
class FoliationPrecondition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long foliation_bounds(const Candidate& c, const Rational& delta);

Verdict eliminate_group_c_minus(long case_id);
Verdict eliminate_group_c_minus(long case_id, const Candidate& c);
Verdict eliminate_group_c_plus(long case_id);
Verdict eliminate_group_c_plus(long case_id, const Candidate& c);

// Routes a candidate by its case id. Unknown candidates are not eliminated.
Verdict eliminate_candidate(const Candidate& c);
Verdict eliminate_case(long case_id);

struct PipelineReport {
  long candidates = 0;
  long eliminated = 0;
  long fully_mechanical = 0;
  long with_cited_lemmas = 0;
  std::vector<Verdict> verdicts;  // case-id order; unidentified candidates last
  std::vector<long> survivors;    // indices into verdicts

  bool all_eliminated() const { return survivors.empty() && eliminated == candidates; }
};

PipelineReport run_pipeline_on(const std::vector<Candidate>& candidates, int workers = 1);
PipelineReport run_full_pipeline(int workers = 1);

// Re-runs the case and compares certificates step for step.
bool replays(const Verdict& v);

}  // namespace qfano
