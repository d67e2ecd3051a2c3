#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfano/arith.hpp"

namespace qfano {

enum class StepKind { Mechanical, CitedLemma };

std::string to_string(StepKind k);
StepKind step_kind_from_string(const std::string& s);

struct CertificateStep {
  StepKind kind = StepKind::Mechanical;
  std::string description;
  // Mechanical steps that exhaust a finite space record its size here.
  std::optional<Integer> domain_size;
  // Cited steps carry the quoted phrase they rest on.
  std::string anchor;
  std::string outcome;
  bool contradiction = false;

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

struct EliminationCertificate {
  long case_id = 0;
  std::string group;
  std::vector<CertificateStep> steps;

  bool fully_mechanical() const;
  bool has_contradiction() const;
  std::vector<std::string> cited_anchors() const;

  CertificateStep& mechanical(std::string description, std::string outcome,
                              std::optional<Integer> domain = std::nullopt);
  CertificateStep& cited(std::string description, std::string anchor, std::string outcome);

  friend bool operator==(const EliminationCertificate&, const EliminationCertificate&) = default;
};

struct Verdict {
  bool eliminated = false;
  EliminationCertificate certificate;
  std::optional<std::vector<long>> witness;  // when a residue system turned out solvable
  std::string note;                          // why elimination stopped, if it did

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Marks the last step as the contradiction and returns an eliminated verdict.
Verdict conclude(EliminationCertificate cert);
// Non-elimination with the reason the argument broke off.
Verdict stop(EliminationCertificate cert, std::string note,
             std::optional<std::vector<long>> witness = std::nullopt);

}  // namespace qfano
