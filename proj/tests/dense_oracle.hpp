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

// Test-only dense complex-matrix simulator: the independent oracle for
// everything that tracks Pauli phases. Keep it slow and obvious.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "lcs/circuit.hpp"
#include "lcs/pauli.hpp"

namespace lcs::testing {

using Complex = std::complex<double>;
using CMat = std::vector<std::vector<Complex>>;

inline CMat cm_zero(std::size_t dim) {
  return CMat(dim, std::vector<Complex>(dim, 0.0));
}

inline CMat cm_identity(std::size_t dim) {
  CMat m = cm_zero(dim);
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

inline CMat cm_mul(const CMat& a, const CMat& b) {
  const std::size_t dim = a.size();
  CMat c = cm_zero(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[i][k] == Complex(0.0)) continue;
      for (std::size_t j = 0; j < dim; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline CMat cm_dagger(const CMat& a) {
  const std::size_t dim = a.size();
  CMat c = cm_zero(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

inline bool cm_close(const CMat& a, const CMat& b, double eps = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (std::abs(a[i][j] - b[i][j]) > eps) return false;
  return true;
}

// Qubit 1 owns the most significant bit of the basis index.
inline std::size_t qubit_bit(std::size_t n, std::size_t qubit) { return n - qubit; }

inline CMat one_qubit_matrix(GateKind k) {
  const Complex i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  switch (k) {
    case GateKind::I: return {{1, 0}, {0, 1}};
    case GateKind::X: return {{0, 1}, {1, 0}};
    case GateKind::Y: return {{0, -i}, {i, 0}};
    case GateKind::Z: return {{1, 0}, {0, -1}};
    case GateKind::H: return {{s, s}, {s, -s}};
    case GateKind::S: return {{1, 0}, {0, i}};
    case GateKind::S_DAG: return {{1, 0}, {0, -i}};
    case GateKind::SQRT_X:
      return {{Complex(0.5, 0.5), Complex(0.5, -0.5)},
              {Complex(0.5, -0.5), Complex(0.5, 0.5)}};
    case GateKind::SQRT_X_DAG:
      return {{Complex(0.5, -0.5), Complex(0.5, 0.5)},
              {Complex(0.5, 0.5), Complex(0.5, -0.5)}};
    default: throw std::invalid_argument("not a one-qubit unitary");
  }
}

inline CMat full_gate_matrix(std::size_t n, const Gate& g) {
  const std::size_t dim = std::size_t(1) << n;
  CMat m = cm_zero(dim);
  if (g.kind == GateKind::TICK) return cm_identity(dim);
  if (!g.is_two_qubit()) {
    const CMat u = one_qubit_matrix(g.kind);
    const std::size_t bit = qubit_bit(n, static_cast<std::size_t>(g.a));
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t old = (col >> bit) & 1;
      for (std::size_t fresh = 0; fresh < 2; ++fresh) {
        const Complex amp = u[fresh][old];
        if (amp == Complex(0.0)) continue;
        const std::size_t row = (col & ~(std::size_t(1) << bit)) | (fresh << bit);
        m[row][col] += amp;
      }
    }
    return m;
  }
  const Complex i(0.0, 1.0);
  const std::size_t abit = qubit_bit(n, static_cast<std::size_t>(g.a));
  const std::size_t bbit = qubit_bit(n, static_cast<std::size_t>(g.b));
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t va = (col >> abit) & 1;
    const std::size_t vb = (col >> bbit) & 1;
    if (g.kind == GateKind::CZ) {
      m[col][col] = (va && vb) ? -1.0 : 1.0;
    } else if (g.kind == GateKind::CX) {
      const std::size_t row = va ? col ^ (std::size_t(1) << bbit) : col;
      m[row][col] = 1.0;
    } else if (g.kind == GateKind::CY) {
      if (!va) {
        m[col][col] = 1.0;
      } else {
        const std::size_t row = col ^ (std::size_t(1) << bbit);
        m[row][col] = vb ? -i : i;  // Y|0> = i|1>, Y|1> = -i|0>
      }
    } else {
      throw std::invalid_argument("not a two-qubit unitary");
    }
  }
  return m;
}

inline CMat unitary_of(const GateSequence& seq) {
  CMat u = cm_identity(std::size_t(1) << seq.n);
  for (const Gate& g : seq.gates) {
    if (g.kind == GateKind::TICK) continue;
    if (!g.is_unitary()) throw std::invalid_argument("non-unitary op in oracle");
    u = cm_mul(full_gate_matrix(seq.n, g), u);
  }
  return u;
}

inline CMat pauli_matrix(const PauliOp& p) {
  const std::size_t n = p.num_qubits();
  // X^x Z^z per qubit, then the global i^phase.
  CMat xpart = cm_identity(std::size_t(1) << n);
  CMat zpart = cm_identity(std::size_t(1) << n);
  for (std::size_t q = 1; q <= n; ++q) {
    if (p.x.get(q - 1))
      xpart = cm_mul(full_gate_matrix(n, Gate{GateKind::X, static_cast<int>(q), 0}), xpart);
    if (p.z.get(q - 1))
      zpart = cm_mul(full_gate_matrix(n, Gate{GateKind::Z, static_cast<int>(q), 0}), zpart);
  }
  CMat m = cm_mul(xpart, zpart);
  const Complex phase = std::pow(Complex(0.0, 1.0), p.phase);
  for (auto& row : m)
    for (auto& entry : row) entry *= phase;
  return m;
}

// U P U† as a dense matrix.
inline CMat conjugate_dense(const GateSequence& seq, const PauliOp& p) {
  const CMat u = unitary_of(seq);
  return cm_mul(cm_mul(u, pauli_matrix(p)), cm_dagger(u));
}

}  // namespace lcs::testing
