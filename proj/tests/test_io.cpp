#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "qfano/eliminate.hpp"
#include "qfano/io.hpp"
#include "support.hpp"

using namespace qfano;

namespace {
std::vector<Candidate> catalog_candidates() {
  std::vector<Candidate> cs;
  for (long id = 1; id <= 36; ++id) cs.push_back(candidate_for_case(id));
  return cs;
}
}  // namespace

TEST(IO, CandidatesJsonRoundTrip) {
  auto cs = catalog_candidates();
  auto text = candidates_to_json(cs);
  EXPECT_EQ(candidates_from_json(text), cs);
  auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["kind"], "candidates");
  EXPECT_EQ(j["payload"][0]["nabla"]["display"], display_hundredths(cs[0].nabla));
}

TEST(IO, CsvAndJsonAgree) {
  auto cs = catalog_candidates();
  EXPECT_EQ(candidates_from_csv(candidates_to_csv(cs)), candidates_from_json(candidates_to_json(cs)));
}

TEST(IO, Markdown) {
  auto md = candidates_to_markdown(catalog_candidates());
  EXPECT_NE(md.find("| № | B_X | q | r_X |"), std::string::npos);
  EXPECT_NE(md.find("74.52"), std::string::npos);
}

TEST(IO, CertificateRoundTrip) {
  std::vector<Verdict> vs;
  for (long id : {1, 10, 24, 27, 35, 3, 12}) vs.push_back(eliminate_case(id));
  auto back = verdicts_from_json(verdicts_to_json(vs));
  EXPECT_EQ(back, vs);
  for (const auto& v : back) EXPECT_TRUE(replays(v));
  back[0].certificate.steps[0].outcome += " (edited)";
  EXPECT_FALSE(replays(back[0]));
  auto csv = verdicts_to_csv(vs);
  size_t rows = 0;
  for (const auto& v : vs) rows += v.certificate.steps.size();
  EXPECT_EQ(static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n')), rows + 1);
}

TEST(IO, MalformedJson) {
  EXPECT_THROW(candidates_from_json("{"), InvalidInput);
  EXPECT_THROW(candidates_from_json(R"({"schema_version":"9","kind":"candidates","payload":[]})"), InvalidInput);
  EXPECT_THROW(verdicts_from_json(R"({"schema_version":"1.0","kind":"candidates","payload":[]})"), InvalidInput);
}

TEST(IO, ValueTable) {
  ValueTable t{"t", {"s", "h0"}, {{"1", "0"}, {"2", "a,b"}}};
  EXPECT_EQ(table_from_json(table_to_json(t)), t);
  EXPECT_EQ(table_from_csv(table_to_csv(t), "t"), t);
}

TEST(IO, CsvQuoting) {
  std::vector<std::string> cells{"a", "b,c", "d\"e", ""};
  EXPECT_EQ(csv_split(csv_join(cells)), cells);
}

TEST(IO, Config) {
  auto kv = parse_config("# comment\nqmin = 70\n\njobs=4  # trailing\n");
  EXPECT_EQ(kv.at("qmin"), "70");
  EXPECT_EQ(kv.at("jobs"), "4");
  EXPECT_THROW(parse_config("nonsense"), InvalidInput);
}
