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
#include <vector>

#include "lcs/circuit.hpp"
#include "lcs/code.hpp"
#include "lcs/gauge.hpp"

namespace lcs {

/// A target logical Clifford gate on k qubits: a tableau with canonical
/// signs (named constructions carry their textbook signs, matrix-loaded
/// targets get positive signs on every generator image).
struct LogicalGate {
  std::size_t k = 0;
  CliffordTableau tableau;

  LogicalGate() : tableau(0) {}
  explicit LogicalGate(CliffordTableau t) : k(t.num_qubits()), tableau(std::move(t)) {}

  static LogicalGate identity(std::size_t k);
  static LogicalGate from_symplectic(const BitMatrix& c);
  /// Gate spec like "H@1", "S@2", "CX@2,1", "CZ@1,2"; multiple gates are
  /// separated by ';' and applied left to right.
  static LogicalGate from_spec(const std::string& spec, std::size_t k);

  BitMatrix symplectic() const { return tableau.symplectic().mat; }
};

struct LogicalOperatorCheck {
  bool ok = false;
  /// Per stabilizer generator, the expansion of its image as generator
  /// indices (0-based); meaningful when ok.
  std::vector<std::vector<std::size_t>> expansions;
  /// First offending generator when not ok.
  std::optional<std::size_t> offender;
};

/// Does the circuit permute the stabilizer group? (GF(2) span test on every
/// conjugated generator.)
LogicalOperatorCheck is_logical_operator(const SymplecticMap& a,
                                         const StabilizerCode& code);
LogicalOperatorCheck is_logical_operator(const GateSequence& circuit,
                                         const StabilizerCode& code);

struct LogicalActionResult {
  BitMatrix action;  // 2k x 2k symplectic map on the logical qubits
  /// Stabilizer cosets of the logical images: X-bar images first, then
  /// Z-bar images, each as generator index lists.
  std::vector<std::vector<std::size_t>> cosets;
};

/// Requires is_logical_operator; decomposes every logical image into
/// logical Pauli times stabilizer element.
LogicalActionResult logical_action(const SymplecticMap& a, const StabilizerCode& code);
LogicalActionResult logical_action(const GateSequence& circuit, const StabilizerCode& code);

struct VerificationReport {
  bool is_logical = false;
  std::optional<BitMatrix> logical_action;
  bool sign_correct = false;
  std::optional<ReducedFreedom> gauge;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Up-to-Pauli check: symplectic logical action equals the target. Strict
/// additionally demands exactly-signed stabilizer fixing and logical images
/// (the circuit's Pauli frame, if any, must already be part of the input).
VerificationReport implements_target(const CliffordTableau& t, const StabilizerCode& code,
                                     const LogicalGate& target, bool strict);
VerificationReport implements_target(const GateSequence& circuit, const StabilizerCode& code,
                                     const LogicalGate& target, bool strict);
VerificationReport implements_target(const LayeredCircuit& circuit, const StabilizerCode& code,
                                     const LogicalGate& target, bool strict);
/// Sign-free variant for symplectic-level inputs (strict unavailable).
VerificationReport implements_target(const SymplecticMap& a, const StabilizerCode& code,
                                     const LogicalGate& target);

/// The unique F' with A·E' = E'·F'. Requires the up-to-Pauli check to pass;
/// throws std::invalid_argument otherwise.
ReducedFreedom extract_gauge(const SymplecticMap& a, const StabilizerCode& code,
                             const LogicalGate& target);
ReducedFreedom extract_gauge(const LayeredCircuit& circuit, const StabilizerCode& code,
                             const LogicalGate& target);

/// The Pauli P making P∘U conjugate every stabilizer generator to a
/// +1-signed stabilizer element and every logical generator to its
/// exactly-signed target image. The circuit tableau must already satisfy
/// the up-to-Pauli condition.
PauliOp compute_pauli_frame(const CliffordTableau& unframed, const StabilizerCode& code,
                            const LogicalGate& target);

/// Computes the frame for the circuit's canonical flattening and stores it
/// in circuit.pauli_frame.
PauliOp fix_pauli_frame(LayeredCircuit& circuit, const StabilizerCode& code,
                        const LogicalGate& target);

}  // namespace lcs
