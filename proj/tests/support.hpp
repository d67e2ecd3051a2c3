#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfano/basket.hpp"
#include "qfano/search.hpp"

namespace qfano::fixtures {

// A row transcribed by hand from a published candidate table.
struct TableRow {
  long id;
  Basket basket;
  long q;
  long rX;
  long rXc13;
  long rXc2c1;
  std::vector<long> prime_powers;
  std::vector<long> lb;
  std::string nabla_display;
};

inline std::string data_path(const std::string& name) { return std::string(QFANO_TEST_DATA) + "/" + name; }

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(s);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::vector<long> longs(const std::string& s, char sep = ',') {
  std::vector<long> out;
  for (const auto& c : split(s, sep))
    if (!c.empty()) out.push_back(std::stol(c));
  return out;
}

inline std::vector<TableRow> load_table(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing " + name);
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split(line, '|');
    if (f.size() != 9) throw std::runtime_error("bad row: " + line);
    std::vector<OrbifoldPoint> pts;
    for (const auto& p : split(f[1], ' ')) {
      auto rb = longs(p, ':');
      pts.push_back(OrbifoldPoint::make(rb[0], rb[1]));
    }
    rows.push_back({std::stol(f[0]), Basket(pts), std::stol(f[2]), std::stol(f[3]), std::stol(f[4]),
                    std::stol(f[5]), longs(f[6]), longs(f[7]), f[8]});
  }
  return rows;
}

inline long product(const std::vector<long>& v) {
  long p = 1;
  for (long x : v) p *= x;
  return p;
}

// Tables do not print J_A; it is the product of the listed prime powers.
inline bool row_matches(const TableRow& r, const Candidate& c) {
  return r.basket == c.basket && r.q == c.q && r.rX == c.rX && r.rXc13 == c.rXc13 && r.rXc2c1 == c.rXc2c1 &&
         r.prime_powers == c.prime_powers && r.lb == c.lb_values && product(r.prime_powers) == c.J_A &&
         r.nabla_display == display_hundredths(c.nabla);
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qfano::fixtures
