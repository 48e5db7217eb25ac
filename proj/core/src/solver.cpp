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

#include "lcs/sat/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>

namespace lcs::sat {

namespace {

// luby(i): restart scaling sequence 1,1,2,1,1,2,4,...
double luby(std::int64_t i) {
  std::int64_t size = 1, seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != i) {
    size = (size - 1) >> 1;
    --seq;
    i = i % size;
  }
  return static_cast<double>(std::int64_t(1) << seq);
}

}  // namespace

Solver::~Solver() {
  for (Clause* c : clauses_) std::free(c);
  for (Clause* c : learnts_) std::free(c);
}

Solver::Clause* Solver::alloc_clause(const std::vector<Lit>& lits, bool learnt) {
  const std::size_t bytes = sizeof(Clause) + (lits.size() > 2 ? (lits.size() - 2) * sizeof(Lit) : 0);
  auto* c = static_cast<Clause*>(std::malloc(bytes));
  if (c == nullptr) throw std::bad_alloc();
  c->act = 0.0f;
  c->learnt = learnt;
  c->size = static_cast<std::uint32_t>(lits.size());
  std::memcpy(c->lits, lits.data(), lits.size() * sizeof(Lit));
  return c;
}

Var Solver::new_var() {
  const Var v = num_vars();
  assigns_.push_back(Tribool::Undef);
  polarity_.push_back(false);
  activity_.push_back(0.0);
  level_.push_back(0);
  reason_.push_back(nullptr);
  seen_.push_back(false);
  heap_pos_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return v;
}

void Solver::attach(Clause* c) {
  watches_[static_cast<std::size_t>((~(*c)[0]).x)].push_back({c, (*c)[1]});
  watches_[static_cast<std::size_t>((~(*c)[1]).x)].push_back({c, (*c)[0]});
}

void Solver::detach(Clause* c) {
  for (int i = 0; i < 2; ++i) {
    auto& ws = watches_[static_cast<std::size_t>((~(*c)[i]).x)];
    for (std::size_t j = 0; j < ws.size(); ++j) {
      if (ws[j].clause == c) {
        ws[j] = ws.back();
        ws.pop_back();
        break;
      }
    }
  }
}

void Solver::remove_clause(Clause* c) {
  detach(c);
  std::free(c);
}

bool Solver::add_clause(std::vector<Lit> lits) {
  if (!ok_) return false;
  if (decision_level() != 0)
    throw std::logic_error("add_clause only at decision level 0");
  std::sort(lits.begin(), lits.end(), [](Lit a, Lit b) { return a.x < b.x; });
  std::vector<Lit> out;
  Lit prev = lit_undef;
  for (Lit l : lits) {
    if (lit_var(l) >= num_vars()) throw std::out_of_range("literal out of range");
    if (value(l) == Tribool::True || l == ~prev) return true;  // satisfied/tautology
    if (value(l) != Tribool::False && l != prev) out.push_back(l);
    prev = l;
  }
  if (out.empty()) {
    ok_ = false;
    return false;
  }
  if (out.size() == 1) {
    if (value(out[0]) == Tribool::False) {
      ok_ = false;
      return false;
    }
    unchecked_enqueue(out[0], nullptr);
    ok_ = (propagate() == nullptr);
    return ok_;
  }
  Clause* c = alloc_clause(out, false);
  clauses_.push_back(c);
  attach(c);
  return true;
}

void Solver::unchecked_enqueue(Lit p, Clause* from) {
  const auto v = static_cast<std::size_t>(lit_var(p));
  assigns_[v] = lit_sign(p) ? Tribool::False : Tribool::True;
  level_[v] = decision_level();
  reason_[v] = from;
  trail_.push_back(p);
}

Solver::Clause* Solver::propagate() {
  Clause* confl = nullptr;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    ++stats_propagations_;
    auto& ws = watches_[static_cast<std::size_t>(p.x)];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      const Watcher w = ws[i];
      if (value(w.blocker) == Tribool::True) {
        ws[j++] = ws[i++];
        continue;
      }
      Clause& c = *w.clause;
      const Lit false_lit = ~p;
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      ++i;
      const Lit first = c[0];
      if (first != w.blocker && value(first) == Tribool::True) {
        ws[j++] = {&c, first};
        continue;
      }
      bool found = false;
      for (std::uint32_t k = 2; k < c.size; ++k) {
        if (value(c[k]) != Tribool::False) {
          std::swap(c[1], c[k]);
          watches_[static_cast<std::size_t>((~c[1]).x)].push_back({&c, first});
          found = true;
          break;
        }
      }
      if (found) continue;
      ws[j++] = {&c, first};
      if (value(first) == Tribool::False) {
        confl = &c;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        unchecked_enqueue(first, &c);
      }
    }
    ws.resize(j);
  }
  return confl;
}

void Solver::cancel_until(int lvl) {
  if (decision_level() <= lvl) return;
  const auto bound = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(lvl)]);
  for (std::size_t c = trail_.size(); c-- > bound;) {
    const auto v = static_cast<std::size_t>(lit_var(trail_[c]));
    polarity_[v] = assigns_[v] == Tribool::True;
    assigns_[v] = Tribool::Undef;
    reason_[v] = nullptr;
    if (!heap_contains(static_cast<Var>(v))) heap_insert(static_cast<Var>(v));
  }
  trail_.resize(bound);
  trail_lim_.resize(static_cast<std::size_t>(lvl));
  qhead_ = trail_.size();
}

void Solver::analyze(Clause* confl, std::vector<Lit>& out_learnt, int& out_btlevel) {
  int path_c = 0;
  Lit p = lit_undef;
  out_learnt.clear();
  out_learnt.push_back(lit_undef);  // placeholder for the asserting literal
  std::size_t index = trail_.size();

  do {
    cla_bump(confl);
    for (std::uint32_t j = (p == lit_undef) ? 0 : 1; j < confl->size; ++j) {
      const Lit q = (*confl)[j];
      const auto v = static_cast<std::size_t>(lit_var(q));
      if (!seen_[v] && level_[v] > 0) {
        var_bump(lit_var(q));
        seen_[v] = true;
        if (level_[v] >= decision_level())
          ++path_c;
        else
          out_learnt.push_back(q);
      }
    }
    while (!seen_[static_cast<std::size_t>(lit_var(trail_[--index]))]) {
    }
    p = trail_[index];
    confl = reason_[static_cast<std::size_t>(lit_var(p))];
    seen_[static_cast<std::size_t>(lit_var(p))] = false;
    --path_c;
  } while (path_c > 0);
  out_learnt[0] = ~p;

  // Local minimization: drop literals whose reason is fully covered.
  analyze_toclear_.assign(out_learnt.begin(), out_learnt.end());
  std::size_t keep = 1;
  for (std::size_t i = 1; i < out_learnt.size(); ++i) {
    const Lit q = out_learnt[i];
    Clause* r = reason_[static_cast<std::size_t>(lit_var(q))];
    bool redundant = false;
    if (r != nullptr) {
      redundant = true;
      for (std::uint32_t j = 0; j < r->size; ++j) {
        const Lit l = (*r)[j];
        if (l == ~q) continue;
        const auto v = static_cast<std::size_t>(lit_var(l));
        if (!seen_[v] && level_[v] > 0) {
          redundant = false;
          break;
        }
      }
    }
    if (!redundant) out_learnt[keep++] = q;
  }
  out_learnt.resize(keep);
  for (Lit l : analyze_toclear_)
    if (l != lit_undef) seen_[static_cast<std::size_t>(lit_var(l))] = false;

  if (out_learnt.size() == 1) {
    out_btlevel = 0;
  } else {
    std::size_t max_i = 1;
    for (std::size_t i = 2; i < out_learnt.size(); ++i)
      if (level_[static_cast<std::size_t>(lit_var(out_learnt[i]))] >
          level_[static_cast<std::size_t>(lit_var(out_learnt[max_i]))])
        max_i = i;
    std::swap(out_learnt[1], out_learnt[max_i]);
    out_btlevel = level_[static_cast<std::size_t>(lit_var(out_learnt[1]))];
  }
}

void Solver::analyze_final(Lit p) {
  conflict_core_.clear();
  conflict_core_.push_back(p);
  if (decision_level() == 0) return;
  seen_[static_cast<std::size_t>(lit_var(p))] = true;
  for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[0]);) {
    const auto v = static_cast<std::size_t>(lit_var(trail_[i]));
    if (!seen_[v]) continue;
    Clause* r = reason_[v];
    if (r == nullptr) {
      if (level_[v] > 0) conflict_core_.push_back(~trail_[i]);
    } else {
      for (std::uint32_t j = 1; j < r->size; ++j) {
        const auto u = static_cast<std::size_t>(lit_var((*r)[j]));
        if (level_[u] > 0) seen_[u] = true;
      }
    }
    seen_[v] = false;
  }
  seen_[static_cast<std::size_t>(lit_var(p))] = false;
}

bool Solver::heap_less(Var a, Var b) const {
  const double aa = activity_[static_cast<std::size_t>(a)];
  const double ab = activity_[static_cast<std::size_t>(b)];
  if (aa != ab) return aa > ab;
  return a < b;
}

void Solver::heap_insert(Var v) {
  heap_pos_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(heap_.size());
  heap_.push_back(v);
  heap_sift_up(heap_.size() - 1);
}

void Solver::heap_sift_up(std::size_t i) {
  const Var v = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!heap_less(v, heap_[parent])) break;
    heap_[i] = heap_[parent];
    heap_pos_[static_cast<std::size_t>(heap_[i])] = static_cast<std::int32_t>(i);
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);
}

void Solver::heap_sift_down(std::size_t i) {
  const Var v = heap_[i];
  while (2 * i + 1 < heap_.size()) {
    std::size_t child = 2 * i + 1;
    if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
    if (!heap_less(heap_[child], v)) break;
    heap_[i] = heap_[child];
    heap_pos_[static_cast<std::size_t>(heap_[i])] = static_cast<std::int32_t>(i);
    i = child;
  }
  heap_[i] = v;
  heap_pos_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);
}

Var Solver::heap_pop() {
  const Var top = heap_[0];
  heap_pos_[static_cast<std::size_t>(top)] = -1;
  heap_[0] = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_pos_[static_cast<std::size_t>(heap_[0])] = 0;
    heap_sift_down(0);
  }
  return top;
}

void Solver::var_bump(Var v) {
  activity_[static_cast<std::size_t>(v)] += var_inc_;
  if (activity_[static_cast<std::size_t>(v)] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  const auto pos = heap_pos_[static_cast<std::size_t>(v)];
  if (pos >= 0) heap_sift_up(static_cast<std::size_t>(pos));
}

void Solver::cla_bump(Clause* c) {
  if (!c->learnt) return;
  c->act += static_cast<float>(cla_inc_);
  if (c->act > 1e20f) {
    for (Clause* l : learnts_) l->act *= 1e-20f;
    cla_inc_ *= 1e-20;
  }
}

void Solver::bump_priority(Var v, double amount) {
  activity_[static_cast<std::size_t>(v)] += amount;
  const auto pos = heap_pos_[static_cast<std::size_t>(v)];
  if (pos >= 0) heap_sift_up(static_cast<std::size_t>(pos));
}

Lit Solver::pick_branch_lit() {
  while (!heap_.empty()) {
    const Var v = heap_[0];
    if (value(v) == Tribool::Undef) {
      heap_pop();
      return mk_lit(v, !polarity_[static_cast<std::size_t>(v)]);
    }
    heap_pop();
  }
  return lit_undef;
}

void Solver::reduce_db() {
  std::vector<Clause*> sorted = learnts_;
  std::stable_sort(sorted.begin(), sorted.end(), [](Clause* a, Clause* b) {
    if ((a->size == 2) != (b->size == 2)) return b->size == 2;
    return a->act < b->act;  // least useful first
  });
  const double extra_lim = cla_inc_ / std::max<std::size_t>(learnts_.size(), 1);
  std::vector<Clause*> kept;
  kept.reserve(learnts_.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Clause* c = sorted[i];
    const bool locked =
        reason_[static_cast<std::size_t>(lit_var((*c)[0]))] == c &&
        value((*c)[0]) == Tribool::True;
    if (c->size > 2 && !locked &&
        (i < sorted.size() / 2 || c->act < extra_lim)) {
      remove_clause(c);
    } else {
      kept.push_back(c);
    }
  }
  learnts_ = std::move(kept);
}

Solver::Result Solver::solve(const std::vector<Lit>& assumptions, const Limits& limits) {
  if (!ok_) return Result::Unsat;
  assumptions_ = assumptions;
  conflict_core_.clear();
  model_.clear();

  const bool has_deadline = limits.seconds >= 0.0;
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(has_deadline ? limits.seconds : 0.0));
  if (has_deadline && limits.seconds <= 0.0) return Result::Unknown;
  const std::uint64_t conflict_limit =
      limits.conflicts >= 0 ? stats_conflicts_ + static_cast<std::uint64_t>(limits.conflicts)
                            : UINT64_MAX;

  max_learnts_ = std::max(static_cast<double>(clauses_.size()) / 3.0, 1000.0);
  std::int64_t restart_round = 0;
  std::uint64_t conflicts_until_restart =
      static_cast<std::uint64_t>(luby(restart_round) * 100.0);
  std::uint64_t conflicts_this_restart = 0;

  Result result = Result::Unknown;
  std::vector<Lit> learnt;

  while (result == Result::Unknown) {
    Clause* confl = propagate();
    if (confl != nullptr) {
      ++stats_conflicts_;
      ++conflicts_this_restart;
      if (decision_level() == 0) {
        ok_ = false;
        result = Result::Unsat;
        break;
      }
      int btlevel = 0;
      analyze(confl, learnt, btlevel);
      cancel_until(std::max(btlevel, 0));
      if (learnt.size() == 1) {
        if (decision_level() != 0) cancel_until(0);
        unchecked_enqueue(learnt[0], nullptr);
      } else {
        Clause* c = alloc_clause(learnt, true);
        learnts_.push_back(c);
        attach(c);
        cla_bump(c);
        unchecked_enqueue(learnt[0], c);
      }
      var_decay();
      cla_decay();
      if ((stats_conflicts_ & 255) == 0) {
        if (has_deadline && std::chrono::steady_clock::now() >= deadline) {
          result = Result::Unknown;
          break;
        }
      }
      if (stats_conflicts_ >= conflict_limit) break;
      continue;
    }

    if (conflicts_this_restart >= conflicts_until_restart) {
      cancel_until(0);
      ++restart_round;
      conflicts_until_restart = static_cast<std::uint64_t>(luby(restart_round) * 100.0);
      conflicts_this_restart = 0;
      continue;
    }
    if (static_cast<double>(learnts_.size()) >= max_learnts_ + trail_.size()) {
      reduce_db();
      max_learnts_ *= 1.1;
    }

    // Assumptions act as forced decisions below real branching.
    Lit next = lit_undef;
    while (static_cast<std::size_t>(decision_level()) < assumptions_.size()) {
      const Lit p = assumptions_[static_cast<std::size_t>(decision_level())];
      if (value(p) == Tribool::True) {
        new_decision_level();
      } else if (value(p) == Tribool::False) {
        analyze_final(~p);
        result = Result::Unsat;
        break;
      } else {
        next = p;
        break;
      }
    }
    if (result != Result::Unknown) break;

    if (next == lit_undef) {
      next = pick_branch_lit();
      if (next == lit_undef) {
        model_.resize(static_cast<std::size_t>(num_vars()));
        for (Var v = 0; v < num_vars(); ++v)
          model_[static_cast<std::size_t>(v)] = value(v) == Tribool::True;
        result = Result::Sat;
        break;
      }
      ++stats_decisions_;
      if ((stats_decisions_ & 4095) == 0 && has_deadline &&
          std::chrono::steady_clock::now() >= deadline) {
        result = Result::Unknown;
        break;
      }
    }
    new_decision_level();
    unchecked_enqueue(next, nullptr);
  }

  cancel_until(0);
  return result;
}

}  // namespace lcs::sat
