// Copyright 2026 The lcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lcs/sat/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lcs::sat {

namespace {

int to_dimacs(Lit l) {
  const int v = lit_var(l) + 1;
  return lit_sign(l) ? -v : v;
}

Lit from_dimacs(long long d) {
  if (d == 0) throw std::invalid_argument("unexpected 0 literal");
  const Var v = static_cast<Var>((d > 0 ? d : -d) - 1);
  return mk_lit(v, d < 0);
}

}  // namespace

void write_dimacs(std::ostream& out, const Cnf& cnf) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& cl : cnf.clauses) {
    for (Lit l : cl) out << to_dimacs(l) << ' ';
    out << "0\n";
  }
}

Cnf read_dimacs(std::istream& in) {
  Cnf cnf;
  std::string line;
  bool have_header = false;
  std::vector<Lit> clause;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream ls(line);
      std::string p, fmt;
      long long v = 0, c = 0;
      if (!(ls >> p >> fmt >> v >> c) || fmt != "cnf")
        throw std::invalid_argument("bad DIMACS header: " + line);
      cnf.num_vars = static_cast<std::int32_t>(v);
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    long long d = 0;
    while (ls >> d) {
      if (d == 0) {
        cnf.clauses.push_back(clause);
        clause.clear();
      } else {
        clause.push_back(from_dimacs(d));
      }
    }
  }
  if (!have_header) throw std::invalid_argument("missing DIMACS header");
  if (!clause.empty()) cnf.clauses.push_back(clause);
  return cnf;
}

void write_wcnf(std::ostream& out, const Cnf& cnf, const std::vector<Lit>& soft_units) {
  const unsigned long long top = soft_units.size() + 1;
  out << "p wcnf " << cnf.num_vars << ' ' << cnf.clauses.size() + soft_units.size()
      << ' ' << top << '\n';
  for (const auto& cl : cnf.clauses) {
    out << top << ' ';
    for (Lit l : cl) out << to_dimacs(l) << ' ';
    out << "0\n";
  }
  for (Lit l : soft_units) out << "1 " << to_dimacs(l) << " 0\n";
}

std::optional<std::vector<bool>> parse_model_lines(std::istream& in,
                                                   std::int32_t num_vars) {
  std::vector<bool> model(static_cast<std::size_t>(num_vars), false);
  bool saw_value = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 's' || line.rfind("SAT", 0) == 0) {
      if (line.find("UNSAT") != std::string::npos) return std::nullopt;
      continue;
    }
    if (line.rfind("UNSAT", 0) == 0) return std::nullopt;
    std::string body = line;
    if (line[0] == 'v') body = line.substr(1);
    std::istringstream ls(body);
    long long d = 0;
    while (ls >> d) {
      if (d == 0) continue;
      const Lit l = from_dimacs(d);
      if (lit_var(l) >= num_vars) continue;
      model[static_cast<std::size_t>(lit_var(l))] = !lit_sign(l);
      saw_value = true;
    }
  }
  if (!saw_value) return std::nullopt;
  return model;
}

}  // namespace lcs::sat
