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

#include <vector>

#include "lcs/sat/solver.hpp"

namespace lcs::sat {

/// Totalizer cardinality tree over a set of input literals. Output literal
/// k (1-based) may be assumed false to enforce "at most k-1 inputs true";
/// the clauses propagate sum >= k into output k.
class Totalizer {
 public:
  Totalizer(Solver& solver, const std::vector<Lit>& inputs);

  std::size_t size() const { return outputs_.size(); }
  /// Literal that is forced true whenever at least k inputs are true.
  Lit at_least(std::size_t k) const { return outputs_.at(k - 1); }
  /// Assumption literal enforcing "at most k inputs true"; k < size().
  Lit at_most_assumption(std::size_t k) const { return ~at_least(k + 1); }

 private:
  std::vector<Lit> build(Solver& solver, const std::vector<Lit>& lits,
                         std::size_t lo, std::size_t hi);
  std::vector<Lit> outputs_;
};

}  // namespace lcs::sat
