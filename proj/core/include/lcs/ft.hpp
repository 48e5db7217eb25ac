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
#include <string>
#include <utility>
#include <vector>

#include "lcs/circuit.hpp"
#include "lcs/code.hpp"

namespace lcs {

/// A circuit on data qubits 1..n plus flag qubits n+1..n+f, with resets,
/// controlled Paulis, flag-flag CZs, and X-basis flag measurements.
struct GadgetCircuit {
  std::size_t data_qubits = 0;
  std::size_t flag_qubits = 0;
  GateSequence ops;  // on data_qubits + flag_qubits
  /// The (P, Q) pairs used, Q the backpropagated controlled Pauli.
  std::vector<std::pair<PauliOp, PauliOp>> guard_paulis;

  std::size_t total_qubits() const { return data_qubits + flag_qubits; }
};

/// Wraps a bare circuit (no flags) for fault checking.
GadgetCircuit bare_gadget(const GateSequence& circuit, std::size_t data_qubits);

/// Q = U† P U with sign, computed through the inverse circuit tableau.
PauliOp backpropagate(const GateSequence& circuit, const PauliOp& p);

struct GadgetOptions {
  bool two_flags = false;
  /// Data-qubit emission order for controlled Paulis (1-indexed); empty
  /// means ascending.
  std::vector<std::size_t> qubit_order;
  /// Optional inward placement: the controlled Paulis sandwich only the
  /// gate window [first, second) of the circuit instead of all of it. The
  /// dangerous fault locations must stay inside the window.
  std::optional<std::pair<std::size_t, std::size_t>> window;
};

/// Lemma-style flag gadget: per guard P, a controlled-(U†PU) before the
/// circuit and a controlled-P after it on the guard's own kickback flag,
/// sandwiched by flag-hook CZs when the hook flag is requested; flags start
/// in |+> and are read out in the X basis. Multiple guards nest around the
/// circuit so that coverage combines as OR across their flags.
GadgetCircuit build_flag_gadget(const GateSequence& circuit, const StabilizerCode& code,
                                const std::vector<PauliOp>& guards,
                                const GadgetOptions& options = {});

/// One fault location per the standard circuit-level model: three Paulis on
/// every incoming data qubit, reset, single-qubit gate, and measurement;
/// fifteen two-qubit Paulis on every two-qubit gate.
struct FaultLocation {
  enum class Kind { Incoming, AfterGate1, AfterGate2, AfterReset, BeforeMeasure };
  Kind kind;
  /// Index into ops for gate-attached locations; SIZE_MAX for incoming.
  std::size_t op_index = SIZE_MAX;
  std::size_t qubit = 0;   // 1-indexed; primary qubit
  std::size_t qubit2 = 0;  // second qubit for two-qubit gates

  std::size_t fault_count() const { return qubit2 == 0 ? 3 : 15; }
  std::string describe() const;
};

std::vector<FaultLocation> fault_locations(const GadgetCircuit& gadget);

struct FaultEffect {
  PauliOp residual;       // on the data qubits, after the full gadget
  BitVector flag_flips;   // one bit per flag measurement, in op order
  bool any_flip() const { return !flag_flips.is_zero(); }
};

/// Inserts the fault Pauli (indexed 0..fault_count-1) at the location and
/// conjugates it through the rest of the gadget, recording measurement
/// flips; resets absorb incoming error components.
FaultEffect propagate_fault(const GadgetCircuit& gadget, const FaultLocation& loc,
                            std::size_t fault_index);

/// Detectable iff a flag flipped, the residual anticommutes with some
/// stabilizer generator, or the residual is a stabilizer element modulo
/// sign (harmless).
bool is_detectable(const PauliOp& err, bool any_flag_flip, const StabilizerCode& code);

struct UndetectableFault {
  FaultLocation location;
  std::size_t fault_index = 0;
  PauliOp residual;
};

struct FaultReport {
  std::size_t total_locations = 0;
  std::size_t total_faults = 0;
  std::vector<UndetectableFault> undetectable;
  bool verdict = false;  // true iff undetectable is empty
};

/// Exhaustive single-fault enumeration (the distance-2 criterion).
FaultReport check_fault_tolerance(const GadgetCircuit& gadget, const StabilizerCode& code);

struct GuardSearchOptions {
  std::size_t max_guards = 8;
  /// Emission orders to try before giving up on a single hook-free flag.
  std::size_t max_order_retries = 8;
  /// Also try sandwiching just the window of dangerous fault locations
  /// (the inward-propagation optimization); verification re-runs either way.
  bool propagate_inward = false;
};

struct GuardSearchResult {
  std::vector<PauliOp> guards;
  GadgetCircuit gadget;
  FaultReport report;
};

/// Finds guard Paulis that make the circuit fault-tolerant: greedy maximal
/// coverage of the bare circuit's undetectable errors via GF(2) solves,
/// then gadget construction and a full re-check, retrying a bounded set of
/// controlled-Pauli orders and finally a second flag. Throws
/// std::runtime_error when no gadget passes within the bounds.
GuardSearchResult find_guards(const GateSequence& circuit, const StabilizerCode& code,
                              const GuardSearchOptions& options = {});

}  // namespace lcs
