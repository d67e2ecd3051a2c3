#include "qfano/io.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/tokenizer.hpp>
#include <sstream>

#include "json.hpp"

namespace qfano {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) {
  return {{"num", r.num().get_str()}, {"den", r.den().get_str()}, {"display", display_hundredths(r)}};
}

Rational rational_from(const json& j) { return Rational(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>())); }

json envelope(const char* kind, json payload) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

const json& open_envelope(const json& doc, const char* kind) {
  if (doc.value("schema_version", "") != kSchemaVersion)
    throw InvalidInput("unsupported schema_version");
  if (doc.value("kind", "") != kind) throw InvalidInput(std::string("expected a ") + kind + " record");
  return doc.at("payload");
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string join_longs(const std::vector<long>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::vector<long> split_longs(const std::string& s) {
  std::vector<long> out;
  std::istringstream is(s);
  long x;
  while (is >> x) out.push_back(x);
  return out;
}

std::string md_escape(std::string s) {
  boost::replace_all(s, "|", "\\|");
  return s;
}

const std::vector<std::string> kCandidateColumns = {"basket", "q",  "J_A",   "r_X",          "rXc13",
                                                    "rXc2c1", "prime_powers", "lb", "nabla", "nabla_display"};

Basket basket_from_pairs(const std::vector<std::pair<long, long>>& pairs) {
  std::vector<OrbifoldPoint> pts;
  for (auto [r, b] : pairs) pts.push_back(OrbifoldPoint::make(r, b));
  return Basket(pts);
}

}  // namespace

std::string candidates_to_json(const std::vector<Candidate>& cs) {
  json arr = json::array();
  for (const auto& c : cs) {
    json basket = json::array();
    for (const auto& p : c.basket.points()) basket.push_back({p.r, p.b});
    arr.push_back({{"basket", basket},
                   {"q", c.q},
                   {"J_A", c.J_A},
                   {"r_X", c.rX},
                   {"rXc13", c.rXc13},
                   {"rXc2c1", c.rXc2c1},
                   {"prime_powers", c.prime_powers},
                   {"lb", c.lb_values},
                   {"nabla", rational_json(c.nabla)}});
  }
  return envelope("candidates", arr).dump(2) + "\n";
}

std::vector<Candidate> candidates_from_json(const std::string& text) {
  json doc = parse_json(text);
  std::vector<Candidate> out;
  try {
    for (const auto& j : open_envelope(doc, "candidates")) {
      Candidate c;
      std::vector<std::pair<long, long>> pairs;
      for (const auto& p : j.at("basket")) pairs.push_back({p.at(0).get<long>(), p.at(1).get<long>()});
      c.basket = basket_from_pairs(pairs);
      c.q = j.at("q").get<long>();
      c.J_A = j.at("J_A").get<long>();
      c.rX = j.at("r_X").get<long>();
      c.rXc13 = j.at("rXc13").get<long>();
      c.rXc2c1 = j.at("rXc2c1").get<long>();
      c.prime_powers = j.at("prime_powers").get<std::vector<long>>();
      c.lb_values = j.at("lb").get<std::vector<long>>();
      c.nabla = rational_from(j.at("nabla"));
      out.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad candidate record: ") + e.what());
  }
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  using Sep = boost::escaped_list_separator<char>;
  boost::tokenizer<Sep> tok(line, Sep('\\', ',', '"'));
  return {tok.begin(), tok.end()};
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    const auto& c = cells[i];
    if (c.find_first_of(",\"\\\n") == std::string::npos) {
      out += c;
    } else {
      out += '"';
      for (char ch : c) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
      }
      out += '"';
    }
  }
  return out;
}

std::string candidates_to_csv(const std::vector<Candidate>& cs) {
  std::string out = csv_join(kCandidateColumns) + "\n";
  for (const auto& c : cs) {
    std::string basket;
    for (const auto& p : c.basket.points())
      basket += (basket.empty() ? "" : " ") + std::to_string(p.r) + ":" + std::to_string(p.b);
    out += csv_join({basket, std::to_string(c.q), std::to_string(c.J_A), std::to_string(c.rX), std::to_string(c.rXc13),
                     std::to_string(c.rXc2c1), join_longs(c.prime_powers, " "), join_longs(c.lb_values, " "),
                     c.nabla.str(), display_hundredths(c.nabla)}) +
           "\n";
  }
  return out;
}

std::vector<Candidate> candidates_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || csv_split(line) != kCandidateColumns) throw InvalidInput("unexpected CSV header");
  std::vector<Candidate> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = csv_split(line);
    if (f.size() != kCandidateColumns.size()) throw InvalidInput("wrong CSV field count");
    Candidate c;
    std::vector<std::pair<long, long>> pairs;
    std::istringstream bs(f[0]);
    std::string tok;
    while (bs >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw InvalidInput("bad basket cell");
      pairs.push_back({std::stol(tok.substr(0, colon)), std::stol(tok.substr(colon + 1))});
    }
    c.basket = basket_from_pairs(pairs);
    c.q = std::stol(f[1]);
    c.J_A = std::stol(f[2]);
    c.rX = std::stol(f[3]);
    c.rXc13 = std::stol(f[4]);
    c.rXc2c1 = std::stol(f[5]);
    c.prime_powers = split_longs(f[6]);
    c.lb_values = split_longs(f[7]);
    c.nabla = Rational::parse(f[8]);
    out.push_back(std::move(c));
  }
  return out;
}

std::string candidates_to_markdown(const std::vector<Candidate>& cs) {
  std::ostringstream os;
  os << "| № | B_X | q | r_X | r_Xc₁³ | r_Xc₂c₁ | {p^a} | {LB(p^a)} | ∇ |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  long n = 0;
  for (const auto& c : cs) {
    auto pp = c.prime_powers.empty() ? std::string("∅") : join_longs(c.prime_powers, ",");
    auto lbs = c.lb_values.empty() ? std::string("∅") : join_longs(c.lb_values, ",");
    os << "| " << ++n << " | " << md_escape(c.basket.str()) << " | " << c.q << " | " << c.rX << " | " << c.rXc13
       << " | " << c.rXc2c1 << " | " << pp << " | " << lbs << " | " << display_hundredths(c.nabla) << " |\n";
  }
  return os.str();
}

std::string verdicts_to_json(const std::vector<Verdict>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json steps = json::array();
    for (const auto& s : v.certificate.steps) {
      steps.push_back({{"kind", to_string(s.kind)},
                       {"description", s.description},
                       {"domain_size", s.domain_size ? json(s.domain_size->get_str()) : json(nullptr)},
                       {"anchor", s.anchor},
                       {"outcome", s.outcome},
                       {"contradiction", s.contradiction}});
    }
    arr.push_back({{"case_id", v.certificate.case_id},
                   {"group", v.certificate.group},
                   {"eliminated", v.eliminated},
                   {"fully_mechanical", v.certificate.fully_mechanical()},
                   {"note", v.note},
                   {"witness", v.witness ? json(*v.witness) : json(nullptr)},
                   {"steps", steps}});
  }
  return envelope("certificates", arr).dump(2) + "\n";
}

std::vector<Verdict> verdicts_from_json(const std::string& text) {
  json doc = parse_json(text);
  std::vector<Verdict> out;
  try {
    for (const auto& j : open_envelope(doc, "certificates")) {
      Verdict v;
      v.certificate.case_id = j.at("case_id").get<long>();
      v.certificate.group = j.at("group").get<std::string>();
      v.eliminated = j.at("eliminated").get<bool>();
      v.note = j.at("note").get<std::string>();
      if (!j.at("witness").is_null()) v.witness = j.at("witness").get<std::vector<long>>();
      for (const auto& s : j.at("steps")) {
        CertificateStep st;
        st.kind = step_kind_from_string(s.at("kind").get<std::string>());
        st.description = s.at("description").get<std::string>();
        if (!s.at("domain_size").is_null()) st.domain_size = Integer(s.at("domain_size").get<std::string>());
        st.anchor = s.at("anchor").get<std::string>();
        st.outcome = s.at("outcome").get<std::string>();
        st.contradiction = s.at("contradiction").get<bool>();
        v.certificate.steps.push_back(std::move(st));
      }
      out.push_back(std::move(v));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad certificate record: ") + e.what());
  }
  return out;
}

std::string verdicts_to_csv(const std::vector<Verdict>& vs) {
  std::string out = csv_join({"case_id", "group", "eliminated", "step", "kind", "description", "domain_size", "anchor",
                              "outcome", "contradiction"}) +
                    "\n";
  for (const auto& v : vs) {
    long k = 0;
    for (const auto& s : v.certificate.steps)
      out += csv_join({std::to_string(v.certificate.case_id), v.certificate.group, v.eliminated ? "true" : "false",
                       std::to_string(++k), to_string(s.kind), s.description,
                       s.domain_size ? s.domain_size->get_str() : "", s.anchor, s.outcome,
                       s.contradiction ? "true" : "false"}) +
             "\n";
  }
  return out;
}

std::string verdicts_to_markdown(const std::vector<Verdict>& vs) {
  std::ostringstream os;
  long elim = 0, mech = 0;
  for (const auto& v : vs) {
    if (v.eliminated) ++elim;
    if (v.eliminated && v.certificate.fully_mechanical()) ++mech;
  }
  os << "Eliminated " << elim << "/" << vs.size() << " (" << mech << " fully mechanical, " << elim - mech
     << " mechanical modulo cited lemmas)\n\n";
  os << "| case | group | eliminated | steps | cited lemmas | note |\n|---|---|---|---|---|---|\n";
  for (const auto& v : vs) {
    os << "| " << v.certificate.case_id << " | " << v.certificate.group << " | " << (v.eliminated ? "yes" : "no")
       << " | " << v.certificate.steps.size() << " | " << v.certificate.cited_anchors().size() << " | "
       << md_escape(v.note) << " |\n";
  }
  for (const auto& v : vs) {
    os << "\n### Case " << v.certificate.case_id << " (" << v.certificate.group << ")\n\n";
    long k = 0;
    for (const auto& s : v.certificate.steps) {
      os << ++k << ". [" << to_string(s.kind) << "] " << s.description;
      if (s.domain_size) os << " (domain " << s.domain_size->get_str() << ")";
      if (!s.anchor.empty()) os << " \"" << s.anchor << "\"";
      os << " → " << s.outcome << (s.contradiction ? " **contradiction**" : "") << "\n";
    }
  }
  return os.str();
}

std::string table_to_json(const ValueTable& t) {
  json payload = {{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}};
  return envelope("values", payload).dump(2) + "\n";
}

ValueTable table_from_json(const std::string& text) {
  json doc = parse_json(text);
  try {
    const auto& p = open_envelope(doc, "values");
    return {p.at("title").get<std::string>(), p.at("columns").get<std::vector<std::string>>(),
            p.at("rows").get<std::vector<std::vector<std::string>>>()};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad value table: ") + e.what());
  }
}

std::string table_to_csv(const ValueTable& t) {
  std::string out = csv_join(t.columns) + "\n";
  for (const auto& r : t.rows) out += csv_join(r) + "\n";
  return out;
}

ValueTable table_from_csv(const std::string& text, const std::string& title) {
  ValueTable t;
  t.title = title;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("empty CSV");
  t.columns = csv_split(line);
  while (std::getline(is, line))
    if (!line.empty()) t.rows.push_back(csv_split(line));
  return t;
}

std::string table_to_markdown(const ValueTable& t) {
  std::ostringstream os;
  if (!t.title.empty()) os << "**" << t.title << "**\n\n";
  os << "|";
  for (const auto& c : t.columns) os << " " << md_escape(c) << " |";
  os << "\n|";
  for (size_t i = 0; i < t.columns.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : t.rows) {
    os << "|";
    for (const auto& c : r) os << " " << md_escape(c) << " |";
    os << "\n";
  }
  return os.str();
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  std::string line;
  long n = 0;
  while (std::getline(is, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    boost::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("config line " + std::to_string(n) + ": expected key = value");
    std::string key = boost::trim_copy(line.substr(0, eq)), value = boost::trim_copy(line.substr(eq + 1));
    if (key.empty()) throw InvalidInput("config line " + std::to_string(n) + ": empty key");
    out[key] = value;
  }
  return out;
}

}  // namespace qfano
