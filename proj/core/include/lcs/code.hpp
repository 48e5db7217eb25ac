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

#include <string>
#include <vector>

#include "lcs/pauli.hpp"

namespace lcs {

/// Stabilizer code with a fixed choice of logical Pauli operators.
struct StabilizerCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliOp> stabilizers;  // n-k generators
  std::vector<PauliOp> logical_x;    // k operators
  std::vector<PauliOp> logical_z;    // k operators
  std::string name;

  /// 2n x (n-k) matrix whose columns are the stabilizer vectors.
  BitMatrix stabilizer_matrix() const;
};

struct CodeDiagnostics {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Checks shapes, Hermiticity, commutation, independence, and the logical
/// anticommutation pattern. Reports the first violated pair per category.
CodeDiagnostics validate(const StabilizerCode& code);

/// Symplectic encoding matrix with columns
/// x_1..x_k | destabilizers | z_1..z_k | s_1..s_{n-k}.
struct EncodingMatrix {
  std::size_t n = 0;
  std::size_t k = 0;
  BitMatrix e;  // 2n x 2n, symplectic
};

/// Completes the prescribed logical and stabilizer columns to a symplectic
/// matrix by symplectic Gram-Schmidt. Requires validate(code).ok.
EncodingMatrix build_encoding(const StabilizerCode& code);

/// E with columns k+1..n removed: 2n x (n+k) with columns
/// x_1..x_k | z_1..z_k | s_1..s_{n-k}.
struct ReducedEncoding {
  std::size_t n = 0;
  std::size_t k = 0;
  BitMatrix e_prime;
};

ReducedEncoding reduce_encoding(const EncodingMatrix& e);

/// Built-in code library.
std::vector<std::string> builtin_code_names();
StabilizerCode builtin_code(const std::string& name);

/// *.code.json: {"name": ..., "n": ..., "k": ..., "stabilizers": [...],
/// "logical_x": [...], "logical_z": [...]} with signed Pauli strings.
StabilizerCode parse_code_json(const std::string& text);
std::string code_to_json(const StabilizerCode& code);
StabilizerCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const StabilizerCode& code);

}  // namespace lcs
