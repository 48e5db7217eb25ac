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

#include "lcs/sat/totalizer.hpp"

namespace lcs::sat {

Totalizer::Totalizer(Solver& solver, const std::vector<Lit>& inputs) {
  if (inputs.empty()) return;
  outputs_ = build(solver, inputs, 0, inputs.size());
}

std::vector<Lit> Totalizer::build(Solver& solver, const std::vector<Lit>& lits,
                                  std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {lits[lo]};
  const std::size_t mid = lo + (hi - lo) / 2;
  const std::vector<Lit> left = build(solver, lits, lo, mid);
  const std::vector<Lit> right = build(solver, lits, mid, hi);
  std::vector<Lit> out;
  out.reserve(left.size() + right.size());
  for (std::size_t i = 0; i < left.size() + right.size(); ++i)
    out.push_back(mk_lit(solver.new_var()));
  // sum_left >= i and sum_right >= j imply sum >= i+j
  for (std::size_t i = 0; i <= left.size(); ++i) {
    for (std::size_t j = 0; j <= right.size(); ++j) {
      if (i + j == 0) continue;
      std::vector<Lit> clause;
      if (i > 0) clause.push_back(~left[i - 1]);
      if (j > 0) clause.push_back(~right[j - 1]);
      clause.push_back(out[i + j - 1]);
      solver.add_clause(clause);
    }
  }
  // ordering: out_{k+1} implies out_k
  for (std::size_t k = 0; k + 1 < out.size(); ++k)
    solver.add_clause({~out[k + 1], out[k]});
  return out;
}

}  // namespace lcs::sat
