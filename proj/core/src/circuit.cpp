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

#include "lcs/circuit.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcs {

bool GateSequence::is_unitary() const {
  for (const auto& g : gates)
    if (!g.is_unitary() && g.kind != GateKind::TICK) return false;
  return true;
}

std::size_t GateSequence::two_qubit_count() const {
  std::size_t c = 0;
  for (const auto& g : gates)
    if (g.is_two_qubit()) ++c;
  return c;
}

GateSequence parse_gate_sequence(std::istream& in, std::size_t min_qubits) {
  GateSequence seq;
  seq.n = min_qubits;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    Gate g;
    g.kind = gate_kind_from_name(name);
    if (g.kind != GateKind::TICK) {
      if (!(ls >> g.a) || g.a < 1)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected a 1-indexed qubit");
      seq.n = std::max(seq.n, static_cast<std::size_t>(g.a));
      if (g.is_two_qubit()) {
        if (!(ls >> g.b) || g.b < 1 || g.b == g.a)
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": expected a distinct second qubit");
        seq.n = std::max(seq.n, static_cast<std::size_t>(g.b));
      }
    }
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": trailing token '" + extra + "'");
    seq.gates.push_back(g);
  }
  return seq;
}

GateSequence parse_gate_sequence(const std::string& text,
                                 std::size_t min_qubits) {
  std::istringstream in(text);
  return parse_gate_sequence(in, min_qubits);
}

std::string serialize_gate_sequence(const GateSequence& seq) {
  std::string out;
  for (const auto& g : seq.gates) {
    out += gate_name(g.kind);
    if (g.kind != GateKind::TICK) {
      out += ' ';
      out += std::to_string(g.a);
      if (g.is_two_qubit()) {
        out += ' ';
        out += std::to_string(g.b);
      }
    }
    out += '\n';
  }
  return out;
}

GateSequence read_circuit_file(const std::string& path,
                               std::size_t min_qubits) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file: " + path);
  return parse_gate_sequence(in, min_qubits);
}

void write_circuit_file(const std::string& path, const GateSequence& seq) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write circuit file: " + path);
  out << serialize_gate_sequence(seq);
}

LayeredCircuit LayeredCircuit::empty(std::size_t n, std::size_t length) {
  LayeredCircuit c;
  c.n = n;
  c.scls.assign(length + 1, std::vector<SingleQubitClifford>(n));
  c.czls.assign(length, BitMatrix(n, n));
  return c;
}

std::size_t LayeredCircuit::cz_count() const {
  std::size_t count = 0;
  for (const auto& gamma : czls)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (gamma.get(i, j)) ++count;
  return count;
}

void LayeredCircuit::check() const {
  if (scls.size() != czls.size() + 1)
    throw std::invalid_argument("need one more SCL than CZLs");
  for (const auto& layer : scls) {
    if (layer.size() != n) throw std::invalid_argument("SCL size mismatch");
    for (const auto& c : layer)
      if (!c.valid())
        throw std::invalid_argument("SCL entry violates the determinant rule");
  }
  for (const auto& gamma : czls) {
    if (gamma.rows() != n || gamma.cols() != n)
      throw std::invalid_argument("CZL adjacency size mismatch");
    if (!gamma.is_symmetric() || !gamma.zero_diagonal())
      throw std::invalid_argument("CZL adjacency must be symmetric, zero diagonal");
  }
  if (pauli_frame && pauli_frame->num_qubits() != n)
    throw std::invalid_argument("Pauli frame size mismatch");
}

SymplecticMap scl_symplectic(const std::vector<SingleQubitClifford>& layer) {
  const std::size_t n = layer.size();
  BitMatrix m(2 * n, 2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    const auto& c = layer[q];
    if (!c.valid())
      throw std::invalid_argument("SCL entry violates the determinant rule");
    m.set(q, q, c.xx);
    m.set(q, n + q, c.xz);
    m.set(n + q, q, c.zx);
    m.set(n + q, n + q, c.zz);
  }
  return SymplecticMap(std::move(m));
}

SymplecticMap czl_symplectic(const BitMatrix& gamma) {
  if (gamma.rows() != gamma.cols())
    throw std::invalid_argument("CZL adjacency must be square");
  if (!gamma.is_symmetric() || !gamma.zero_diagonal())
    throw std::invalid_argument("CZL adjacency must be symmetric, zero diagonal");
  const std::size_t n = gamma.rows();
  BitMatrix m = BitMatrix::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gamma.get(i, j)) m.set(n + i, j, true);
  return SymplecticMap(std::move(m));
}

SymplecticMap circuit_symplectic(const LayeredCircuit& c) {
  c.check();
  SymplecticMap acc = scl_symplectic(c.scls[0]);
  for (std::size_t i = 0; i < c.length(); ++i) {
    acc = czl_symplectic(c.czls[i]) * acc;
    acc = scl_symplectic(c.scls[i + 1]) * acc;
  }
  return acc;
}

GateSequence flatten(const LayeredCircuit& c) {
  c.check();
  GateSequence seq;
  seq.n = c.n;
  // TICKs separate non-empty blocks; empty layers leave no trace.
  bool pending_tick = false;
  auto block = [&] { pending_tick = !seq.gates.empty(); };
  auto push = [&](Gate g) {
    if (pending_tick) {
      seq.gates.push_back(Gate{GateKind::TICK, 0, 0});
      pending_tick = false;
    }
    seq.gates.push_back(g);
  };
  for (std::size_t i = 0; i <= c.length(); ++i) {
    block();
    for (std::size_t q = 0; q < c.n; ++q)
      for (GateKind k : canonical_word(c.scls[i][q]))
        push(Gate{k, static_cast<int>(q + 1), 0});
    if (i < c.length()) {
      block();
      for (std::size_t u = 0; u < c.n; ++u)
        for (std::size_t v = u + 1; v < c.n; ++v)
          if (c.czls[i].get(u, v))
            push(Gate{GateKind::CZ, static_cast<int>(u + 1), static_cast<int>(v + 1)});
    }
  }
  if (c.pauli_frame && !c.pauli_frame->is_identity()) {
    block();
    for (std::size_t q = 0; q < c.n; ++q) {
      const bool x = c.pauli_frame->x.get(q), z = c.pauli_frame->z.get(q);
      if (!x && !z) continue;
      const GateKind k = x ? (z ? GateKind::Y : GateKind::X) : GateKind::Z;
      push(Gate{k, static_cast<int>(q + 1), 0});
    }
  }
  return seq;
}

CliffordTableau tableau_of(const GateSequence& seq) {
  CliffordTableau t(seq.n);
  for (const auto& g : seq.gates) {
    if (g.kind == GateKind::TICK) continue;
    if (!g.is_unitary())
      throw std::invalid_argument("gate sequence contains non-unitary ops");
    t.apply_gate(g);
  }
  return t;
}

CliffordTableau tableau_of(const LayeredCircuit& c) {
  return tableau_of(flatten(c));
}

LayeredCircuit concat(const LayeredCircuit& a, const LayeredCircuit& b) {
  if (a.n != b.n) throw std::invalid_argument("qubit count mismatch");
  if (a.pauli_frame || b.pauli_frame)
    throw std::invalid_argument("cannot concatenate framed circuits");
  a.check();
  b.check();
  LayeredCircuit c;
  c.n = a.n;
  c.scls = a.scls;
  // Fuse b's first SCL onto a's last.
  for (std::size_t q = 0; q < c.n; ++q)
    c.scls.back()[q] = b.scls[0][q].compose_after(a.scls.back()[q]);
  c.scls.insert(c.scls.end(), b.scls.begin() + 1, b.scls.end());
  c.czls = a.czls;
  c.czls.insert(c.czls.end(), b.czls.begin(), b.czls.end());
  return c;
}

}  // namespace lcs
