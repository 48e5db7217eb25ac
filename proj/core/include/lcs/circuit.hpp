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
#include <string>
#include <vector>

#include "lcs/pauli.hpp"

namespace lcs {

/// A flat, ordered list of primitive operations. Qubits are 1-indexed.
struct GateSequence {
  std::size_t n = 0;
  std::vector<Gate> gates;

  bool is_unitary() const;
  std::size_t two_qubit_count() const;
  bool operator==(const GateSequence&) const = default;
};

/// One gate per line, whitespace separated, 1-indexed qubits. `#` starts a
/// comment, `TICK` marks a layer boundary. The qubit count is the largest
/// index mentioned unless min_qubits says otherwise.
GateSequence parse_gate_sequence(std::istream& in, std::size_t min_qubits = 0);
GateSequence parse_gate_sequence(const std::string& text,
                                 std::size_t min_qubits = 0);
std::string serialize_gate_sequence(const GateSequence& seq);

GateSequence read_circuit_file(const std::string& path,
                               std::size_t min_qubits = 0);
void write_circuit_file(const std::string& path, const GateSequence& seq);

/// Alternating single-qubit Clifford layers and CZ layers:
/// scls[0], czls[0], scls[1], ..., czls[l-1], scls[l], then the optional
/// Pauli frame. Each czls entry is a symmetric adjacency matrix with zero
/// diagonal.
struct LayeredCircuit {
  std::size_t n = 0;
  std::vector<std::vector<SingleQubitClifford>> scls;
  std::vector<BitMatrix> czls;
  std::optional<PauliOp> pauli_frame;

  static LayeredCircuit empty(std::size_t n, std::size_t length);

  std::size_t length() const { return czls.size(); }
  std::size_t cz_count() const;
  /// Throws std::invalid_argument when shapes or layer invariants break.
  void check() const;
};

SymplecticMap scl_symplectic(const std::vector<SingleQubitClifford>& layer);
/// Eq-free form [[I,0],[Γ,I]]; Γ must be symmetric with zero diagonal.
SymplecticMap czl_symplectic(const BitMatrix& gamma);
/// Ordered product of the layer maps; ignores the Pauli frame.
SymplecticMap circuit_symplectic(const LayeredCircuit& c);

/// Canonical gate-for-gate expansion: canonical words for SCL entries, one
/// CZ per layer edge (upper triangle, row-major), TICK between layers, the
/// Pauli frame as trailing X/Y/Z gates.
GateSequence flatten(const LayeredCircuit& c);

/// Tableau of a unitary gate sequence. Throws on resets or measurements.
CliffordTableau tableau_of(const GateSequence& seq);
CliffordTableau tableau_of(const LayeredCircuit& c);

/// Concatenation as circuits (a first, then b) with the boundary SCLs
/// fused; Pauli frames must be unset.
LayeredCircuit concat(const LayeredCircuit& a, const LayeredCircuit& b);

}  // namespace lcs
