#include "qfano/certificate.hpp"

#include <algorithm>

namespace qfano {

std::string to_string(StepKind k) { return k == StepKind::Mechanical ? "mechanical" : "cited-lemma"; }

StepKind step_kind_from_string(const std::string& s) {
  if (s == "mechanical") return StepKind::Mechanical;
  if (s == "cited-lemma") return StepKind::CitedLemma;
  throw InvalidInput("unknown step kind: " + s);
}

bool EliminationCertificate::fully_mechanical() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const CertificateStep& s) { return s.kind == StepKind::Mechanical; });
}

bool EliminationCertificate::has_contradiction() const {
  return std::any_of(steps.begin(), steps.end(), [](const CertificateStep& s) { return s.contradiction; });
}

std::vector<std::string> EliminationCertificate::cited_anchors() const {
  std::vector<std::string> out;
  for (const auto& s : steps)
    if (s.kind == StepKind::CitedLemma) out.push_back(s.anchor);
  return out;
}

CertificateStep& EliminationCertificate::mechanical(std::string description, std::string outcome,
                                                    std::optional<Integer> domain) {
  CertificateStep s;
  s.kind = StepKind::Mechanical;
  s.description = std::move(description);
  s.outcome = std::move(outcome);
  s.domain_size = std::move(domain);
  steps.push_back(std::move(s));
  return steps.back();
}

CertificateStep& EliminationCertificate::cited(std::string description, std::string anchor,
                                               std::string outcome) {
  CertificateStep s;
  s.kind = StepKind::CitedLemma;
  s.description = std::move(description);
  s.anchor = std::move(anchor);
  s.outcome = std::move(outcome);
  steps.push_back(std::move(s));
  return steps.back();
}

Verdict conclude(EliminationCertificate cert) {
  if (cert.steps.empty()) throw std::logic_error("cannot conclude an empty certificate");
  cert.steps.back().contradiction = true;
  Verdict v;
  v.eliminated = true;
  v.certificate = std::move(cert);
  return v;
}

Verdict stop(EliminationCertificate cert, std::string note, std::optional<std::vector<long>> witness) {
  Verdict v;
  v.eliminated = false;
  v.certificate = std::move(cert);
  v.note = std::move(note);
  v.witness = std::move(witness);
  return v;
}

}  // namespace qfano
