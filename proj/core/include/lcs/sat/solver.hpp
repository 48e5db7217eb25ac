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

#include <chrono>
#include <cstdint>
#include <vector>

namespace lcs::sat {

using Var = std::int32_t;  // 0-based

/// Literal encoded as 2*var + sign; sign 1 means negated.
struct Lit {
  std::int32_t x = -2;
  bool operator==(const Lit&) const = default;
};

inline Lit mk_lit(Var v, bool neg = false) { return Lit{2 * v + (neg ? 1 : 0)}; }
inline Lit operator~(Lit l) { return Lit{l.x ^ 1}; }
inline bool lit_sign(Lit l) { return l.x & 1; }
inline Var lit_var(Lit l) { return l.x >> 1; }
constexpr Lit lit_undef{-2};

enum class Tribool : std::uint8_t { False = 0, True = 1, Undef = 2 };

struct SolveLimits {
  double seconds = -1.0;        // < 0: no wall-clock limit
  std::int64_t conflicts = -1;  // < 0: no conflict limit
};

/// Conflict-driven clause-learning solver: two-watched-literal propagation,
/// first-UIP learning with local minimization, activity-driven branching
/// with phase saving, Luby restarts, and activity-based learnt-clause
/// reduction. Deterministic for a fixed input sequence.
class Solver {
 public:
  Solver() = default;
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  Var new_var();
  std::int32_t num_vars() const { return static_cast<std::int32_t>(assigns_.size()); }

  /// False when the clause database is already unsatisfiable.
  bool add_clause(std::vector<Lit> lits);
  bool ok() const { return ok_; }

  enum class Result { Sat, Unsat, Unknown };
  using Limits = SolveLimits;

  Result solve(const std::vector<Lit>& assumptions = {},
               const Limits& limits = Limits());

  bool model_value(Var v) const { return model_[static_cast<std::size_t>(v)]; }
  const std::vector<bool>& model() const { return model_; }

  /// Nudges the initial branching order; higher is decided earlier.
  void bump_priority(Var v, double amount);

  std::uint64_t conflicts() const { return stats_conflicts_; }
  std::uint64_t decisions() const { return stats_decisions_; }
  std::uint64_t propagations() const { return stats_propagations_; }

 private:
  struct Clause {
    float act = 0.0f;
    bool learnt = false;
    std::uint32_t size = 0;
    Lit lits[2];  // over-allocated

    Lit& operator[](std::uint32_t i) { return lits[i]; }
    Lit operator[](std::uint32_t i) const { return lits[i]; }
  };

  struct Watcher {
    Clause* clause;
    Lit blocker;
  };

  static Clause* alloc_clause(const std::vector<Lit>& lits, bool learnt);
  void attach(Clause* c);
  void detach(Clause* c);
  void remove_clause(Clause* c);

  Tribool value(Var v) const { return assigns_[static_cast<std::size_t>(v)]; }
  Tribool value(Lit l) const {
    const Tribool v = value(lit_var(l));
    if (v == Tribool::Undef) return v;
    return (v == Tribool::True) != lit_sign(l) ? Tribool::True : Tribool::False;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  void new_decision_level() { trail_lim_.push_back(static_cast<std::int32_t>(trail_.size())); }
  void unchecked_enqueue(Lit p, Clause* reason);
  Clause* propagate();
  void cancel_until(int level);
  void analyze(Clause* confl, std::vector<Lit>& out_learnt, int& out_btlevel);
  void analyze_final(Lit p);
  Lit pick_branch_lit();
  void reduce_db();

  void var_bump(Var v);
  void var_decay() { var_inc_ /= 0.95; }
  void cla_bump(Clause* c);
  void cla_decay() { cla_inc_ /= 0.999; }

  // order heap keyed by activity, ties broken by index
  bool heap_less(Var a, Var b) const;
  void heap_insert(Var v);
  Var heap_pop();
  void heap_sift_up(std::size_t i);
  void heap_sift_down(std::size_t i);
  bool heap_contains(Var v) const { return heap_pos_[static_cast<std::size_t>(v)] >= 0; }

  std::vector<Clause*> clauses_;
  std::vector<Clause*> learnts_;
  std::vector<std::vector<Watcher>> watches_;  // indexed by Lit::x

  std::vector<Tribool> assigns_;
  std::vector<bool> polarity_;   // saved phase, false by default
  std::vector<double> activity_;
  std::vector<std::int32_t> level_;
  std::vector<Clause*> reason_;
  std::vector<Lit> trail_;
  std::vector<std::int32_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<std::int32_t> heap_;
  std::vector<std::int32_t> heap_pos_;

  std::vector<bool> seen_;
  std::vector<Lit> analyze_toclear_;

  std::vector<Lit> assumptions_;
  std::vector<Lit> conflict_core_;

  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  double max_learnts_ = 0;

  bool ok_ = true;
  std::vector<bool> model_;

  std::uint64_t stats_conflicts_ = 0;
  std::uint64_t stats_decisions_ = 0;
  std::uint64_t stats_propagations_ = 0;
};

}  // namespace lcs::sat
