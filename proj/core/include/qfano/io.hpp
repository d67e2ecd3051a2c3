#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfano/certificate.hpp"
#include "qfano/search.hpp"

namespace qfano {

inline constexpr const char* kSchemaVersion = "1.0";

// A generic titled table of strings, used for h0, wps, lb and duval output.
struct ValueTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const ValueTable&, const ValueTable&) = default;
};

// Candidates. JSON: {"schema_version", "kind": "candidates", "payload": [...]}
// with baskets as sorted [[r, b], ...] and nabla as {"num", "den", "display"}.
std::string candidates_to_json(const std::vector<Candidate>& cs);
std::vector<Candidate> candidates_from_json(const std::string& text);
// CSV cells: basket "r:b r:b", lists space separated, nabla "num/den" plus a display column.
std::string candidates_to_csv(const std::vector<Candidate>& cs);
std::vector<Candidate> candidates_from_csv(const std::string& text);
// Rows are numbered after canonical sorting; they are not stable across releases of the candidate list.
std::string candidates_to_markdown(const std::vector<Candidate>& cs);

std::string verdicts_to_json(const std::vector<Verdict>& vs);
std::vector<Verdict> verdicts_from_json(const std::string& text);
// One row per step.
std::string verdicts_to_csv(const std::vector<Verdict>& vs);
std::string verdicts_to_markdown(const std::vector<Verdict>& vs);

std::string table_to_json(const ValueTable& t);
ValueTable table_from_json(const std::string& text);
std::string table_to_csv(const ValueTable& t);
ValueTable table_from_csv(const std::string& text, const std::string& title = "");
std::string table_to_markdown(const ValueTable& t);

// "key = value" lines; '#' starts a comment. Throws InvalidInput on junk.
std::map<std::string, std::string> parse_config(const std::string& text);

// RFC 4180 style row split/join.
std::vector<std::string> csv_split(const std::string& line);
std::string csv_join(const std::vector<std::string>& cells);

}  // namespace qfano
