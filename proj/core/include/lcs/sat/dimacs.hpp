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

#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "lcs/sat/solver.hpp"

namespace lcs::sat {

struct Cnf {
  std::int32_t num_vars = 0;
  std::vector<std::vector<Lit>> clauses;
};

/// Standard DIMACS CNF ("p cnf V C" header, 0-terminated clauses).
void write_dimacs(std::ostream& out, const Cnf& cnf);
Cnf read_dimacs(std::istream& in);

/// Weighted CNF in the classic "p wcnf V C TOP" format: all Cnf clauses are
/// hard, plus one weight-1 soft unit clause per given literal.
void write_wcnf(std::ostream& out, const Cnf& cnf, const std::vector<Lit>& soft_units);

/// Parses solver output: "v ..." value lines (and a bare list of literals
/// as a fallback). Returns an assignment indexed by 0-based variable, or
/// nullopt if an "s UNSATISFIABLE" line is seen or no values are present.
std::optional<std::vector<bool>> parse_model_lines(std::istream& in,
                                                   std::int32_t num_vars);

}  // namespace lcs::sat
