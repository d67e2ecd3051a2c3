#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qfano/eliminate.hpp"
#include "qfano/io.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qfano");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = qfano::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qfano_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(CLI, UsageErrors) {
  EXPECT_EQ(run({}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"eliminate", "--case", "99"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"eliminate"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"eliminate", "--case", "1", "--all"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"wps", "--weights", "1,2,x,4"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"wps", "--weights", "1,2,3"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"duval", "--type", "F4"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"h0", "--s", "1..70"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"search", "--mode", "sideways"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"--format", "xml", "h0"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"report", "--in", "/nonexistent.json"}).code, qfano::cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, qfano::cli::kOk);
}

TEST(CLI, OracleCommands) {
  auto lb = run({"lb", "--R", "2,4,4,7", "--N", "3", "--format", "csv"});
  EXPECT_EQ(lb.code, 0);
  EXPECT_EQ(lb.out, "N,LB\n3,14\n");
  auto dv = run({"duval", "--type", "D5", "--format", "csv"});
  EXPECT_EQ(dv.code, 0);
  EXPECT_NE(dv.out.find("D5,6,5,12,4"), std::string::npos);
  auto wps = run({"wps", "--weights", "5,6,22,33", "--smax", "65", "--format", "csv"});
  auto h0 = run({"h0", "--s", "1..65", "--format", "csv"});
  EXPECT_EQ(wps.code, 0);
  EXPECT_EQ(h0.code, 0);
  EXPECT_EQ(wps.out, h0.out);
  auto bad = run({"wps", "--weights", "2,2,2,3", "--smax", "4"});
  EXPECT_EQ(bad.code, 0);
  EXPECT_NE(bad.err.find("not well formed"), std::string::npos);
}

TEST(CLI, SearchAndEliminate) {
  auto eq = run({"search", "--mode", "equal", "--format", "json"});
  EXPECT_EQ(eq.code, 0);
  EXPECT_EQ(qfano::candidates_from_json(eq.out).size(), 7u);
  auto e1 = run({"eliminate", "--case", "1", "--format", "json"});
  EXPECT_EQ(e1.code, 0);
  auto vs = qfano::verdicts_from_json(e1.out);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(*vs[0].certificate.steps.back().domain_size, 84);

  auto path = temp_file("all.json");
  auto all = run({"eliminate", "--all", "--jobs", "4", "--format", "json", "--out", path.string()});
  EXPECT_EQ(all.code, 0);
  EXPECT_TRUE(all.out.empty());
  auto report = run({"report", "--in", path.string()});
  EXPECT_EQ(report.code, 0);
  EXPECT_NE(report.out.find("Eliminated 36/36"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CLI, ReportFlagsSurvivors) {
  auto v = qfano::eliminate_case(1);
  v.eliminated = false;
  auto path = temp_file("surv.json");
  {
    std::ofstream f(path);
    f << qfano::verdicts_to_json({v});
  }
  EXPECT_EQ(run({"report", "--in", path.string()}).code, qfano::cli::kInvariant);
  std::filesystem::remove(path);
}

TEST(CLI, ConfigFile) {
  auto cfg = temp_file("cfg");
  auto dir = temp_file("outdir");
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(cfg);
    f << "qmin = 66\njobs = 2\nout = " << dir.string() << "\nformat = csv\n";
  }
  auto r = run({"--config", cfg.string(), "search", "--mode", "equal"});
  EXPECT_EQ(r.code, 0);
  auto text = qfano::fixtures::slurp((dir / "search.csv").string());
  EXPECT_EQ(qfano::candidates_from_csv(text).size(), 7u);
  {
    std::ofstream f(cfg);
    f << "colour = blue\n";
  }
  EXPECT_EQ(run({"--config", cfg.string(), "h0"}).code, qfano::cli::kUsage);
  std::filesystem::remove(cfg);
  std::filesystem::remove_all(dir);
}
