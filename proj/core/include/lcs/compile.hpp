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

#include <optional>
#include <utility>
#include <vector>

#include "lcs/connectivity.hpp"
#include "lcs/sat/dimacs.hpp"
#include "lcs/verify.hpp"

namespace lcs {

struct SclVarSet {
  sat::Var xx, xz, zx, zz;
};

/// Propositional encoding of the layered-ansatz constraint system: the
/// circuit layers applied to the reduced encoding must reproduce it under a
/// reduced freedom matrix carrying the target. Models are in one-to-one
/// correspondence with (SCL, CZL, F') assignments; the CZL edge literals
/// are the cost literals.
struct SatInstance {
  std::size_t n = 0, k = 0, l = 0;
  sat::Cnf cnf;
  std::vector<std::vector<SclVarSet>> scl_vars;  // [l+1][n]
  /// Allowed edges per CZ layer (0-based u < v) and their variables.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> czl_edges;
  std::vector<std::vector<sat::Var>> czl_vars;
  /// Free bottom rows of the reduced freedom matrix: [n-k][n+k].
  std::vector<std::vector<sat::Var>> fprime_vars;
  std::vector<sat::Lit> cost_lits;
  std::size_t aux_vars = 0;

  BitMatrix target;          // 2k x 2k
  ReducedEncoding encoding;  // kept for decoding and re-checks
};

SatInstance encode(const ReducedEncoding& enc, const BitMatrix& target_c,
                   std::size_t l, const ConnectivityGraph& con);

/// True when the assignment satisfies every clause of the instance.
bool satisfies(const SatInstance& inst, const std::vector<bool>& model);

enum class SolveStatus {
  Optimal,   // model found, optimality proved by UNSAT at cost-1
  Feasible,  // model found, budget exhausted before the proof
  Unsat,     // unsatisfiable at this ansatz length
  NoModel,   // budget exhausted before any model
};

const char* to_string(SolveStatus s);

struct Budget {
  double seconds = 60.0;
};

struct MinimizeResult {
  SolveStatus status = SolveStatus::NoModel;
  std::vector<bool> model;  // empty when no model was found
  std::size_t cost = 0;
  /// Cost bounds tried (SIZE_MAX for the unbounded first call) and whether
  /// each was satisfiable.
  std::vector<std::pair<std::size_t, sat::Solver::Result>> bound_trace;
};

/// Finds a model of minimal CZ count: one unbounded solve, then a totalizer
/// bound descending from the first model's cost under incremental
/// assumptions.
MinimizeResult minimize(const SatInstance& inst, const Budget& budget);

struct DecodedModel {
  LayeredCircuit circuit;
  ReducedFreedom gauge;
};

DecodedModel decode_model(const SatInstance& inst, const std::vector<bool>& model);

struct CompileResult {
  LayeredCircuit circuit;  // Pauli frame set
  ReducedFreedom gauge;
  std::size_t cz_count = 0;
  SolveStatus status = SolveStatus::Feasible;  // Optimal or Feasible
  VerificationReport report;
};

struct CompileOutcome {
  SolveStatus status = SolveStatus::NoModel;
  std::optional<CompileResult> result;  // set iff a circuit was found
  std::size_t length = 0;               // ansatz length of the result
  double seconds = 0.0;

  bool found() const { return result.has_value(); }
};

/// Full pipeline at a fixed ansatz length: encode, minimize, decode, fix
/// the Pauli frame, verify strictly.
CompileOutcome compile(const StabilizerCode& code, const LogicalGate& target,
                       std::size_t l, const ConnectivityGraph& con,
                       const Budget& budget);

/// Tries l = 0..l_max with the budget applied per length; returns the best
/// result by cost (ties to the shorter ansatz).
CompileOutcome compile_deepening(const StabilizerCode& code, const LogicalGate& target,
                                 std::size_t l_max, const ConnectivityGraph& con,
                                 const Budget& budget);

/// Generator-decomposition fallback: any symplectic map as a
/// hardware-respecting circuit via swap routing on a connected graph.
/// No optimality claim.
LayeredCircuit baseline_compile(const SymplecticMap& unitary,
                                const ConnectivityGraph& con);

}  // namespace lcs
