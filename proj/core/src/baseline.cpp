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

#include <stdexcept>

#include "lcs/compile.hpp"

namespace lcs {

namespace {

// Reduces a symplectic matrix to the identity by left-multiplying
// elementary gates, recording them; the circuit is the reversed list of
// inverses. Every CZ is emitted on a connectivity edge; long-range CX and
// SWAP are routed along shortest paths.
class BaselineSynthesizer {
 public:
  BaselineSynthesizer(const SymplecticMap& unitary, const ConnectivityGraph& con)
      : n_(unitary.n), t_(unitary.mat), con_(con) {}

  LayeredCircuit run() {
    for (std::size_t i = 0; i < n_; ++i) {
      fix_x_column(i);
      fix_z_column(i);
    }
    if (t_ != BitMatrix::identity(2 * n_))
      throw std::logic_error("baseline reduction did not reach the identity");
    return assemble();
  }

 private:
  // Elementary left-multiplications. H swaps the x/z rows of a qubit,
  // S adds the x row into the z row, SQRT_X the reverse, CZ couples pairs.
  void emit_h(std::size_t q) {
    ops_.push_back(Gate{GateKind::H, static_cast<int>(q + 1), 0});
    t_.swap_rows(q, n_ + q);
  }
  void emit_s(std::size_t q) {
    ops_.push_back(Gate{GateKind::S, static_cast<int>(q + 1), 0});
    t_.xor_row(n_ + q, q);
  }
  void emit_sqrt_x(std::size_t q) {
    ops_.push_back(Gate{GateKind::SQRT_X, static_cast<int>(q + 1), 0});
    t_.xor_row(q, n_ + q);
  }
  void emit_cz_edge(std::size_t a, std::size_t b) {
    ops_.push_back(
        Gate{GateKind::CZ, static_cast<int>(a + 1), static_cast<int>(b + 1)});
    t_.xor_row(n_ + a, b);
    t_.xor_row(n_ + b, a);
  }
  void emit_cx_edge(std::size_t c, std::size_t t) {
    emit_h(t);
    emit_cz_edge(c, t);
    emit_h(t);
  }
  void emit_swap_edge(std::size_t a, std::size_t b) {
    emit_cx_edge(a, b);
    emit_cx_edge(b, a);
    emit_cx_edge(a, b);
  }

  // Routed CX between arbitrary qubits: swap the control next to the
  // target and back.
  void routed_cx(std::size_t c, std::size_t t) {
    const auto path = con_.shortest_path(c + 1, t + 1);
    for (std::size_t i = 0; i + 2 < path.size(); ++i)
      emit_swap_edge(path[i] - 1, path[i + 1] - 1);
    emit_cx_edge(path[path.size() - 2] - 1, t);
    for (std::size_t i = path.size() - 2; i-- > 0;)
      emit_swap_edge(path[i] - 1, path[i + 1] - 1);
  }
  void routed_swap(std::size_t a, std::size_t b) {
    const auto path = con_.shortest_path(a + 1, b + 1);
    for (std::size_t i = 0; i + 2 < path.size(); ++i)
      emit_swap_edge(path[i] - 1, path[i + 1] - 1);
    emit_swap_edge(path[path.size() - 2] - 1, b);
    for (std::size_t i = path.size() - 2; i-- > 0;)
      emit_swap_edge(path[i] - 1, path[i + 1] - 1);
  }

  // Turns column i of t_ into e_i (the X_i image).
  void fix_x_column(std::size_t i) {
    // Per-qubit support becomes pure X, then a CX fan-in, then a swap.
    for (std::size_t q = i; q < n_; ++q) {
      const bool x = t_.get(q, i), z = t_.get(n_ + q, i);
      if (!x && z)
        emit_h(q);
      else if (x && z)
        emit_s(q);
    }
    std::vector<std::size_t> supp;
    for (std::size_t q = i; q < n_; ++q)
      if (t_.get(q, i)) supp.push_back(q);
    if (supp.empty())
      throw std::logic_error("symplectic column lost its support");
    while (supp.size() > 1) {
      routed_cx(supp[0], supp[1]);
      supp.erase(supp.begin() + 1);
    }
    if (supp[0] != i) routed_swap(i, supp[0]);
  }

  // Turns column n+i into e_{n+i} while preserving columns <= i.
  void fix_z_column(std::size_t i) {
    for (std::size_t q = i + 1; q < n_; ++q) {
      const bool x = t_.get(q, n_ + i), z = t_.get(n_ + q, n_ + i);
      if (x && z)
        emit_s(q);
      if (t_.get(q, n_ + i)) emit_h(q);
    }
    if (t_.get(i, n_ + i)) emit_sqrt_x(i);
    for (std::size_t q = i + 1; q < n_; ++q)
      if (t_.get(n_ + q, n_ + i)) routed_cx(q, i);
  }

  // Reverse the recorded gates, invert each, and pack into layers.
  LayeredCircuit assemble() const {
    LayeredCircuit c;
    c.n = n_;
    c.scls.assign(1, std::vector<SingleQubitClifford>(n_));
    bool in_cz_block = false;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
      if (it->kind == GateKind::CZ) {
        if (!in_cz_block) {
          c.czls.emplace_back(n_, n_);
          c.scls.emplace_back(n_, SingleQubitClifford{});
          in_cz_block = true;
        }
        c.czls.back().flip(static_cast<std::size_t>(it->a - 1),
                           static_cast<std::size_t>(it->b - 1));
        c.czls.back().flip(static_cast<std::size_t>(it->b - 1),
                           static_cast<std::size_t>(it->a - 1));
        continue;
      }
      in_cz_block = false;
      // H and CZ are involutions; S and SQRT_X invert to their daggers,
      // which share the symplectic class.
      const auto action = one_qubit_action(it->kind);
      SingleQubitClifford inverse_class{action.symplectic.zz, action.symplectic.xz,
                                        action.symplectic.zx, action.symplectic.xx};
      auto& slot = c.scls.back()[static_cast<std::size_t>(it->a - 1)];
      slot = inverse_class.compose_after(slot);
    }
    return c;
  }

  std::size_t n_;
  BitMatrix t_;
  const ConnectivityGraph& con_;
  std::vector<Gate> ops_;
};

}  // namespace

LayeredCircuit baseline_compile(const SymplecticMap& unitary,
                                const ConnectivityGraph& con) {
  if (unitary.n != con.n)
    throw std::invalid_argument("unitary/connectivity size mismatch");
  if (!con.is_connected())
    throw std::invalid_argument("baseline synthesis needs a connected graph");
  if (unitary.n == 0) return LayeredCircuit::empty(0, 0);
  return BaselineSynthesizer(unitary, con).run();
}

}  // namespace lcs
