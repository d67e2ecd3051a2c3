#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfano/duval.hpp"
#include "qfano/eliminate.hpp"
#include "qfano/io.hpp"
#include "qfano/lb.hpp"
#include "qfano/search.hpp"
#include "qfano/wps.hpp"

namespace qfano::cli {
namespace {

struct Options {
  std::string format = "md";
  std::string out;
  std::string config;
  int jobs = 1;
  long qmin = 66;
  std::string out_dir;  // from the config file only
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long to_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": '" + s + "'");
  }
}

std::vector<long> parse_list(const std::string& s, const std::string& what) {
  std::vector<long> out;
  for (const auto& cell : csv_split(s)) out.push_back(to_long(cell, what));
  if (out.empty()) throw UsageError("empty " + what);
  return out;
}

// "A..B" or a single value.
std::pair<long, long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    long v = to_long(s, "range");
    return {v, v};
  }
  long a = to_long(s.substr(0, dots), "range");
  long b = to_long(s.substr(dots + 2), "range");
  if (a > b) throw UsageError("empty range " + s);
  return {a, b};
}

std::string render(const ValueTable& t, const std::string& fmt) {
  if (fmt == "json") return table_to_json(t);
  if (fmt == "csv") return table_to_csv(t);
  return table_to_markdown(t);
}

std::string render(const std::vector<Candidate>& cs, const std::string& fmt) {
  if (fmt == "json") return candidates_to_json(cs);
  if (fmt == "csv") return candidates_to_csv(cs);
  return candidates_to_markdown(cs);
}

std::string render(const std::vector<Verdict>& vs, const std::string& fmt) {
  if (fmt == "json") return verdicts_to_json(vs);
  if (fmt == "csv") return verdicts_to_csv(vs);
  return verdicts_to_markdown(vs);
}

class Emitter {
 public:
  Emitter(const Options& o, std::string command, std::ostream& out)
      : opts_(o), command_(std::move(command)), out_(out) {}

  void operator()(const std::string& text) const {
    std::string path = opts_.out;
    if (path.empty() && !opts_.out_dir.empty()) {
      std::string ext = opts_.format == "md" ? "md" : opts_.format;
      path = opts_.out_dir + "/" + command_ + "." + ext;
    }
    if (path.empty()) {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
      return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }

 private:
  const Options& opts_;
  std::string command_;
  std::ostream& out_;
};

void apply_config(Options& o, const CLI::App& app) {
  if (o.config.empty()) return;
  auto kv = parse_config(read_file(o.config));
  for (const auto& [key, value] : kv) {
    if (key == "qmin") {
      if (app.get_subcommand("search")->count("--qmin") == 0) o.qmin = to_long(value, "qmin");
    } else if (key == "jobs") {
      if (app.count("--jobs") == 0) o.jobs = static_cast<int>(to_long(value, "jobs"));
    } else if (key == "out") {
      o.out_dir = value;
    } else if (key == "format") {
      if (app.count("--format") == 0) o.format = value;
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  if (o.format != "json" && o.format != "csv" && o.format != "md")
    throw UsageError("format must be json, csv or md");
}

int cmd_search(const Options& o, const std::string& mode, const Emitter& emit, std::ostream& err) {
  if (o.qmin < 1) throw UsageError("--qmin must be positive");
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  SearchMode m = mode == "equal" ? SearchMode::Equal : SearchMode::Greater;
  auto cs = run_search(o.qmin, m, o.jobs);
  int rc = kOk;
  for (const auto& c : cs) {
    for (const auto& v : check_candidate(c)) {
      err << "invariant violated: " << v << '\n';
      rc = kInvariant;
    }
  }
  emit(render(cs, o.format));
  return rc;
}

int cmd_eliminate(const Options& o, std::optional<long> case_id, const Emitter& emit,
                  std::ostream& err) {
  if (o.jobs < 1) throw UsageError("--jobs must be positive");
  std::vector<Verdict> vs;
  if (case_id) {
    if (*case_id < 1 || *case_id > 36) throw UsageError("unknown case " + std::to_string(*case_id));
    vs.push_back(eliminate_case(*case_id));
  } else {
    auto rep = run_full_pipeline(o.jobs);
    vs = rep.verdicts;
    err << rep.eliminated << "/" << rep.candidates << " eliminated, " << rep.fully_mechanical
        << " fully mechanical, " << rep.with_cited_lemmas << " with cited lemmas\n";
  }
  emit(render(vs, o.format));
  int rc = kOk;
  for (const auto& v : vs) {
    if (!v.eliminated) {
      err << "survivor: case " << v.certificate.case_id << ": " << v.note << '\n';
      rc = kInvariant;
    }
  }
  return rc;
}

int cmd_report(const Options& o, const std::string& in, const Emitter& emit, std::ostream& err) {
  std::vector<Verdict> vs;
  try {
    vs = verdicts_from_json(read_file(in));
  } catch (const InvalidInput& e) {
    throw UsageError(std::string("bad certificate file: ") + e.what());
  }
  emit(render(vs, o.format));
  int rc = kOk;
  for (const auto& v : vs) {
    if (!v.eliminated) {
      err << "survivor: case " << v.certificate.case_id << '\n';
      rc = kInvariant;
    }
  }
  return rc;
}

int cmd_h0(const Options& o, const std::string& range, const Emitter& emit) {
  auto [a, b] = parse_range(range);
  if (a < 1 || b > 65) throw UsageError("--s must lie in 1..65");
  ValueTable t{"h0(sA) for Group C", {"s", "h0"}, {}};
  for (long s = a; s <= b; ++s) t.rows.push_back({std::to_string(s), std::to_string(group_c_closed_form(s))});
  emit(render(t, o.format));
  return kOk;
}

int cmd_wps(const Options& o, const std::string& weights, long smax, const Emitter& emit,
            std::ostream& err) {
  auto w = parse_list(weights, "weights");
  if (w.size() != 4) throw UsageError("--weights needs four entries");
  if (smax < 1) throw UsageError("--smax must be positive");
  auto P = WeightedP3::make(w[0], w[1], w[2], w[3]);
  if (!P.well_formed()) err << "warning: P(" << weights << ") is not well formed\n";
  auto series = h0_series(P, smax);
  ValueTable t{"P(" + weights + "), -K degree " + std::to_string(anticanonical_degree(P)) + ", (-K)^3 = " +
                   anticanonical_volume(P).str(),
               {"s", "h0"},
               {}};
  for (long s = 1; s <= smax; ++s) t.rows.push_back({std::to_string(s), std::to_string(series[s])});
  emit(render(t, o.format));
  return kOk;
}

int cmd_lb(const Options& o, const std::string& R, const std::string& Ns, const Emitter& emit) {
  auto r = parse_list(R, "R");
  for (long x : r)
    if (x < 2) throw UsageError("entries of R must be at least 2");
  LBContext ctx(r);
  ValueTable t{"LB for R = {" + R + "}", {"N", "LB"}, {}};
  for (long N : parse_list(Ns, "N")) {
    if (N < 1) throw UsageError("N must be positive");
    t.rows.push_back({std::to_string(N), std::to_string(lb(ctx, N))});
  }
  emit(render(t, o.format));
  return kOk;
}

int cmd_duval(const Options& o, const std::string& type, const Emitter& emit) {
  auto t = DuValType::parse(type);
  auto inv = invariants(t);
  std::string cg;
  for (const auto& d : class_group(t)) {
    if (!cg.empty()) cg += " x ";
    cg += "Z/" + d.get_str();
  }
  if (cg.empty()) cg = "0";
  ValueTable tab{"Du Val singularity " + t.name(),
                 {"type", "e", "e'", "g", "j", "det", "Cl"},
                 {{t.name(), std::to_string(inv.e), std::to_string(inv.e_prime), std::to_string(inv.g),
                   std::to_string(inv.j), determinant(cartan_matrix(t)).get_str(), cg}}};
  emit(render(tab, o.format));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search and elimination tools for Q-Fano threefold candidates"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--out", o.out, "Write output to this file");
  app.add_option("--config", o.config, "key = value file (qmin, jobs, out, format)");
  app.add_option("--jobs", o.jobs, "Worker threads");

  auto* search = app.add_subcommand("search", "Enumerate candidates");
  std::string mode = "greater";
  search->add_option("--qmin", o.qmin, "Lower bound on q");
  search->add_option("--mode", mode, "greater: q > qmin, equal: q = qmin")
      ->check(CLI::IsMember({"greater", "equal"}));

  auto* elim = app.add_subcommand("eliminate", "Run the elimination scripts");
  long case_id = 0;
  auto* case_opt = elim->add_option("--case", case_id, "Case number 1..36");
  auto* all_flag = elim->add_flag("--all", "Run every candidate of the search");
  case_opt->excludes(all_flag);
  elim->require_option(1);

  auto* report = app.add_subcommand("report", "Summarise a certificates JSON file");
  std::string in;
  report->add_option("--in", in, "Certificates JSON")->required();

  auto* h0cmd = app.add_subcommand("h0", "Closed-form h0(sA) of Group C");
  std::string range = "1..65";
  h0cmd->add_option("--s", range, "s or A..B");

  auto* wps = app.add_subcommand("wps", "h0 on a weighted projective 3-space");
  std::string weights;
  long smax = 65;
  wps->add_option("--weights", weights, "w0,w1,w2,w3")->required();
  wps->add_option("--smax", smax, "Largest degree");

  auto* lbcmd = app.add_subcommand("lb", "Lower bound LB(N) for a multiset R");
  std::string R, Ns;
  lbcmd->add_option("--R", R, "r1,r2,...")->required();
  lbcmd->add_option("--N", Ns, "N or N1,N2,...")->required();

  auto* dv = app.add_subcommand("duval", "Invariants of a Du Val singularity");
  std::string type;
  dv->add_option("--type", type, "A_n, D_n or E_n, e.g. D5")->required();

  // CLI11 options are shared by the app and its subcommands.
  for (auto* sub : {search, elim, report, h0cmd, wps, lbcmd, dv}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    apply_config(o, app);
    auto* sub = app.get_subcommands().front();
    Emitter emit(o, sub->get_name(), out);
    if (sub == search) return cmd_search(o, mode, emit, err);
    if (sub == elim)
      return cmd_eliminate(o, all_flag->count() ? std::nullopt : std::optional<long>(case_id), emit, err);
    if (sub == report) return cmd_report(o, in, emit, err);
    if (sub == h0cmd) return cmd_h0(o, range, emit);
    if (sub == wps) return cmd_wps(o, weights, smax, emit, err);
    if (sub == lbcmd) return cmd_lb(o, R, Ns, emit);
    if (sub == dv) return cmd_duval(o, type, emit);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}

}  // namespace qfano::cli
