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

#include <chrono>
#include <stdexcept>

#include "lcs/compile.hpp"
#include "lcs/sat/totalizer.hpp"

namespace lcs {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible-budget-exhausted";
    case SolveStatus::Unsat: return "unsat-at-this-length";
    case SolveStatus::NoModel: return "budget-exhausted-no-model";
  }
  return "?";
}

namespace {

double seconds_left(const std::chrono::steady_clock::time_point& deadline) {
  const auto left = std::chrono::duration_cast<std::chrono::duration<double>>(
      deadline - std::chrono::steady_clock::now());
  return std::max(left.count(), 0.0);
}

std::size_t model_cost(const SatInstance& inst, const std::vector<bool>& model) {
  std::size_t cost = 0;
  for (sat::Lit l : inst.cost_lits)
    if (model[static_cast<std::size_t>(sat::lit_var(l))] != sat::lit_sign(l)) ++cost;
  return cost;
}

}  // namespace

MinimizeResult minimize(const SatInstance& inst, const Budget& budget) {
  const auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(budget.seconds));

  sat::Solver solver;
  for (std::int32_t v = 0; v < inst.cnf.num_vars; ++v) solver.new_var();
  for (const auto& clause : inst.cnf.clauses)
    if (!solver.add_clause(clause)) {
      MinimizeResult r;
      r.status = SolveStatus::Unsat;
      return r;
    }

  MinimizeResult r;
  auto run = [&](const std::vector<sat::Lit>& assumptions) {
    sat::Solver::Limits limits;
    limits.seconds = seconds_left(deadline);
    return solver.solve(assumptions, limits);
  };

  const auto first = run({});
  r.bound_trace.emplace_back(SIZE_MAX, first);
  if (first == sat::Solver::Result::Unsat) {
    r.status = SolveStatus::Unsat;
    return r;
  }
  if (first == sat::Solver::Result::Unknown) {
    r.status = SolveStatus::NoModel;
    return r;
  }
  r.model = solver.model();
  r.cost = model_cost(inst, r.model);
  if (r.cost == 0) {
    r.status = SolveStatus::Optimal;
    return r;
  }

  sat::Totalizer totalizer(solver, inst.cost_lits);
  while (true) {
    const std::size_t bound = r.cost - 1;
    const auto res = run({totalizer.at_most_assumption(bound)});
    r.bound_trace.emplace_back(bound, res);
    if (res == sat::Solver::Result::Sat) {
      r.model = solver.model();
      r.cost = model_cost(inst, r.model);
      if (r.cost == 0) {
        r.status = SolveStatus::Optimal;
        return r;
      }
      continue;
    }
    r.status = res == sat::Solver::Result::Unsat ? SolveStatus::Optimal
                                                 : SolveStatus::Feasible;
    return r;
  }
}

DecodedModel decode_model(const SatInstance& inst, const std::vector<bool>& model) {
  const std::size_t n = inst.n, k = inst.k;
  auto bit = [&model](sat::Var v) {
    return model[static_cast<std::size_t>(v)];
  };
  LayeredCircuit circuit = LayeredCircuit::empty(n, inst.l);
  for (std::size_t layer = 0; layer <= inst.l; ++layer)
    for (std::size_t q = 0; q < n; ++q) {
      const SclVarSet& v = inst.scl_vars[layer][q];
      SingleQubitClifford& c = circuit.scls[layer][q];
      c.xx = bit(v.xx);
      c.xz = bit(v.xz);
      c.zx = bit(v.zx);
      c.zz = bit(v.zz);
      if (!c.valid())
        throw std::logic_error("model violates the SCL determinant constraint");
    }
  for (std::size_t layer = 0; layer < inst.l; ++layer)
    for (std::size_t e = 0; e < inst.czl_edges[layer].size(); ++e)
      if (bit(inst.czl_vars[layer][e])) {
        const auto [u, v] = inst.czl_edges[layer][e];
        circuit.czls[layer].set(u, v, true);
        circuit.czls[layer].set(v, u, true);
      }

  BitMatrix f_prime(n + k, n + k);
  for (std::size_t r = 0; r < 2 * k; ++r)
    for (std::size_t c = 0; c < 2 * k; ++c)
      if (inst.target.get(r, c)) f_prime.set(r, c, true);
  for (std::size_t r = 0; r < n - k; ++r)
    for (std::size_t c = 0; c < n + k; ++c)
      if (bit(inst.fprime_vars[r][c])) f_prime.set(2 * k + r, c, true);
  return DecodedModel{std::move(circuit), ReducedFreedom{n, k, std::move(f_prime)}};
}

CompileOutcome compile(const StabilizerCode& code, const LogicalGate& target,
                       std::size_t l, const ConnectivityGraph& con,
                       const Budget& budget) {
  const auto started = std::chrono::steady_clock::now();
  const auto diagnostics = validate(code);
  if (!diagnostics.ok)
    throw std::invalid_argument("invalid code: " + diagnostics.problems.front());
  if (target.k != code.k)
    throw std::invalid_argument("target logical qubit count mismatch");

  const ReducedEncoding enc = reduce_encoding(build_encoding(code));
  const SatInstance inst = encode(enc, target.symplectic(), l, con);
  const MinimizeResult minimized = minimize(inst, budget);

  CompileOutcome outcome;
  outcome.status = minimized.status;
  outcome.length = l;
  if (minimized.status == SolveStatus::Optimal ||
      minimized.status == SolveStatus::Feasible) {
    DecodedModel decoded = decode_model(inst, minimized.model);
    CompileResult result;
    result.circuit = std::move(decoded.circuit);
    result.gauge = std::move(decoded.gauge);
    result.cz_count = result.circuit.cz_count();
    result.status = minimized.status;
    fix_pauli_frame(result.circuit, code, target);
    result.report = implements_target(result.circuit, code, target, /*strict=*/true);
    if (!result.report.passed())
      throw std::logic_error("compiled circuit failed verification: " +
                             result.report.failures.front());
    if (result.cz_count != minimized.cost)
      throw std::logic_error("decoded CZ count differs from the model cost");
    outcome.result = std::move(result);
  }
  outcome.seconds = std::chrono::duration_cast<std::chrono::duration<double>>(
                        std::chrono::steady_clock::now() - started)
                        .count();
  return outcome;
}

CompileOutcome compile_deepening(const StabilizerCode& code, const LogicalGate& target,
                                 std::size_t l_max, const ConnectivityGraph& con,
                                 const Budget& budget) {
  const auto started = std::chrono::steady_clock::now();
  CompileOutcome best;
  bool all_unsat = true;
  for (std::size_t l = 0; l <= l_max; ++l) {
    CompileOutcome attempt = compile(code, target, l, con, budget);
    if (attempt.status != SolveStatus::Unsat) all_unsat = false;
    if (attempt.found() &&
        (!best.found() || attempt.result->cz_count < best.result->cz_count))
      best = std::move(attempt);
    if (best.found() && best.result->cz_count == 0) break;
  }
  if (!best.found()) best.status = all_unsat ? SolveStatus::Unsat : SolveStatus::NoModel;
  best.seconds = std::chrono::duration_cast<std::chrono::duration<double>>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  return best;
}

}  // namespace lcs
