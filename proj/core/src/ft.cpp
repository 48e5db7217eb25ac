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

#include "lcs/ft.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lcs {

GadgetCircuit bare_gadget(const GateSequence& circuit, std::size_t data_qubits) {
  if (circuit.n > data_qubits)
    throw std::invalid_argument("circuit touches qubits beyond the data block");
  GadgetCircuit g;
  g.data_qubits = data_qubits;
  g.flag_qubits = 0;
  g.ops = circuit;
  g.ops.n = data_qubits;
  return g;
}

PauliOp backpropagate(const GateSequence& circuit, const PauliOp& p) {
  if (p.num_qubits() != circuit.n)
    throw std::invalid_argument("Pauli/circuit size mismatch");
  return tableau_of(circuit).inverse().conjugate(p);
}

namespace {

void emit_controlled_pauli(GateSequence& ops, std::size_t flag, const PauliOp& pauli,
                           const std::vector<std::size_t>& order) {
  if (pauli.negative()) ops.gates.push_back(Gate{GateKind::Z, static_cast<int>(flag), 0});
  for (std::size_t q : order) {
    const bool x = pauli.x.get(q - 1), z = pauli.z.get(q - 1);
    if (!x && !z) continue;
    const GateKind kind = x ? (z ? GateKind::CY : GateKind::CX) : GateKind::CZ;
    ops.gates.push_back(Gate{kind, static_cast<int>(flag), static_cast<int>(q)});
  }
}

}  // namespace

GadgetCircuit build_flag_gadget(const GateSequence& circuit, const StabilizerCode& code,
                                const std::vector<PauliOp>& guards,
                                const GadgetOptions& options) {
  if (circuit.n != code.n)
    throw std::invalid_argument("circuit/code qubit count mismatch");
  const std::size_t n = code.n;
  std::vector<std::size_t> order = options.qubit_order;
  if (order.empty())
    for (std::size_t q = 1; q <= n; ++q) order.push_back(q);
  if (order.size() != n)
    throw std::invalid_argument("qubit order must cover every data qubit");

  // One kickback flag per guard: a flag shared across nested sandwiches
  // would record only the combined parity of the kickbacks, which cannot
  // separate a dependent set of errors. The optional hook flag is shared;
  // a single fault can only strike one sandwich.
  GadgetCircuit g;
  g.data_qubits = n;
  g.flag_qubits = guards.empty() ? 0 : guards.size() + (options.two_flags ? 1 : 0);
  g.ops.n = n + g.flag_qubits;
  const std::size_t hook = n + guards.size() + 1;
  auto flag_of = [n](std::size_t i) { return n + 1 + i; };

  const std::size_t gate_count = circuit.gates.size();
  const auto window = options.window.value_or(std::make_pair(std::size_t(0), gate_count));
  if (window.first > window.second || window.second > gate_count)
    throw std::invalid_argument("gadget window out of range");
  GateSequence segment;
  segment.n = n;
  segment.gates.assign(circuit.gates.begin() + static_cast<long>(window.first),
                       circuit.gates.begin() + static_cast<long>(window.second));

  for (const PauliOp& p : guards) {
    if (p.num_qubits() != n)
      throw std::invalid_argument("guard Pauli size mismatch");
    g.guard_paulis.emplace_back(p, backpropagate(segment, p));
  }

  if (!guards.empty()) {
    for (std::size_t i = 0; i < guards.size(); ++i)
      g.ops.gates.push_back(Gate{GateKind::RP, static_cast<int>(flag_of(i)), 0});
    if (options.two_flags)
      g.ops.gates.push_back(Gate{GateKind::RP, static_cast<int>(hook), 0});
  }
  for (std::size_t i = 0; i < window.first; ++i) g.ops.gates.push_back(circuit.gates[i]);
  if (!guards.empty()) {
    // Nested sandwich: the last guard's backpropagated Pauli goes first.
    for (std::size_t i = g.guard_paulis.size(); i-- > 0;) {
      if (options.two_flags)
        g.ops.gates.push_back(
            Gate{GateKind::CZ, static_cast<int>(flag_of(i)), static_cast<int>(hook)});
      emit_controlled_pauli(g.ops, flag_of(i), g.guard_paulis[i].second, order);
    }
  }
  for (const Gate& gate : segment.gates) g.ops.gates.push_back(gate);
  if (!guards.empty()) {
    for (std::size_t i = 0; i < g.guard_paulis.size(); ++i) {
      emit_controlled_pauli(g.ops, flag_of(i), g.guard_paulis[i].first, order);
      if (options.two_flags)
        g.ops.gates.push_back(
            Gate{GateKind::CZ, static_cast<int>(flag_of(i)), static_cast<int>(hook)});
    }
  }
  for (std::size_t i = window.second; i < gate_count; ++i)
    g.ops.gates.push_back(circuit.gates[i]);
  if (!guards.empty()) {
    for (std::size_t i = 0; i < guards.size(); ++i)
      g.ops.gates.push_back(Gate{GateKind::MX, static_cast<int>(flag_of(i)), 0});
    if (options.two_flags)
      g.ops.gates.push_back(Gate{GateKind::MX, static_cast<int>(hook), 0});
  }
  return g;
}

std::string FaultLocation::describe() const {
  switch (kind) {
    case Kind::Incoming:
      return "incoming qubit " + std::to_string(qubit);
    case Kind::AfterGate1:
      return "after 1q gate #" + std::to_string(op_index) + " on qubit " +
             std::to_string(qubit);
    case Kind::AfterGate2:
      return "after 2q gate #" + std::to_string(op_index) + " on qubits " +
             std::to_string(qubit) + "," + std::to_string(qubit2);
    case Kind::AfterReset:
      return "after reset #" + std::to_string(op_index) + " on qubit " +
             std::to_string(qubit);
    case Kind::BeforeMeasure:
      return "before measurement #" + std::to_string(op_index) + " on qubit " +
             std::to_string(qubit);
  }
  return "?";
}

std::vector<FaultLocation> fault_locations(const GadgetCircuit& gadget) {
  std::vector<FaultLocation> locations;
  // Incoming faults on qubits that are not freshly reset.
  std::vector<bool> reset_first(gadget.total_qubits() + 1, false);
  std::vector<bool> touched(gadget.total_qubits() + 1, false);
  for (const Gate& g : gadget.ops.gates) {
    if (g.kind == GateKind::TICK) continue;
    if ((g.kind == GateKind::R0 || g.kind == GateKind::RP) &&
        !touched[static_cast<std::size_t>(g.a)])
      reset_first[static_cast<std::size_t>(g.a)] = true;
    touched[static_cast<std::size_t>(g.a)] = true;
    if (g.is_two_qubit()) touched[static_cast<std::size_t>(g.b)] = true;
  }
  for (std::size_t q = 1; q <= gadget.total_qubits(); ++q)
    if (!reset_first[q])
      locations.push_back({FaultLocation::Kind::Incoming, SIZE_MAX, q, 0});

  for (std::size_t i = 0; i < gadget.ops.gates.size(); ++i) {
    const Gate& g = gadget.ops.gates[i];
    const auto a = static_cast<std::size_t>(g.a);
    switch (g.kind) {
      case GateKind::TICK:
        break;
      case GateKind::R0:
      case GateKind::RP:
        locations.push_back({FaultLocation::Kind::AfterReset, i, a, 0});
        break;
      case GateKind::MX:
      case GateKind::MZ:
        locations.push_back({FaultLocation::Kind::BeforeMeasure, i, a, 0});
        break;
      case GateKind::CZ:
      case GateKind::CX:
      case GateKind::CY:
        locations.push_back(
            {FaultLocation::Kind::AfterGate2, i, a, static_cast<std::size_t>(g.b)});
        break;
      default:
        locations.push_back({FaultLocation::Kind::AfterGate1, i, a, 0});
        break;
    }
  }
  return locations;
}

namespace {

// fault_index 0..2 -> X, Y, Z on one qubit.
void apply_single_fault(PauliOp& err, std::size_t qubit, std::size_t idx) {
  PauliOp f = PauliOp::identity(err.num_qubits());
  if (idx == 0 || idx == 1) f.x.set(qubit - 1, true);
  if (idx == 1 || idx == 2) f.z.set(qubit - 1, true);
  if (idx == 1) f.phase = 1;
  err *= f;
}

// fault_index 0..14 -> the fifteen non-identity two-qubit Paulis.
void apply_double_fault(PauliOp& err, std::size_t qa, std::size_t qb, std::size_t idx) {
  const std::size_t code = idx + 1;  // 1..15 in base 4: (a, b) components
  const std::size_t ca = code / 4, cb = code % 4;
  PauliOp f = PauliOp::identity(err.num_qubits());
  auto set_component = [&f](std::size_t q, std::size_t c) {
    if (c == 1 || c == 2) f.x.set(q - 1, true);
    if (c == 2 || c == 3) f.z.set(q - 1, true);
    if (c == 2) f.phase = (f.phase + 1) % 4;
  };
  set_component(qa, ca);
  set_component(qb, cb);
  err *= f;
}

void clear_qubit(PauliOp& err, std::size_t qubit) {
  err.x.set(qubit - 1, false);
  err.z.set(qubit - 1, false);
  err = PauliOp::hermitian(err.x, err.z);
}

}  // namespace

FaultEffect propagate_fault(const GadgetCircuit& gadget, const FaultLocation& loc,
                            std::size_t fault_index) {
  std::size_t measure_count = 0;
  for (const Gate& g : gadget.ops.gates)
    if (g.kind == GateKind::MX || g.kind == GateKind::MZ) ++measure_count;

  PauliOp err = PauliOp::identity(gadget.total_qubits());
  FaultEffect effect;
  effect.flag_flips = BitVector(measure_count);

  auto inject = [&] {
    if (loc.kind == FaultLocation::Kind::AfterGate2)
      apply_double_fault(err, loc.qubit, loc.qubit2, fault_index);
    else
      apply_single_fault(err, loc.qubit, fault_index);
  };

  if (loc.kind == FaultLocation::Kind::Incoming) inject();

  std::size_t measure_seen = 0;
  for (std::size_t i = 0; i < gadget.ops.gates.size(); ++i) {
    const Gate& g = gadget.ops.gates[i];
    const auto q = static_cast<std::size_t>(g.a);
    switch (g.kind) {
      case GateKind::TICK:
        break;
      case GateKind::R0:
      case GateKind::RP:
        clear_qubit(err, q);
        break;
      case GateKind::MX:
      case GateKind::MZ: {
        if (loc.kind == FaultLocation::Kind::BeforeMeasure && loc.op_index == i)
          inject();
        const bool flips = g.kind == GateKind::MX ? err.z.get(q - 1) : err.x.get(q - 1);
        if (flips) effect.flag_flips.set(measure_seen, true);
        ++measure_seen;
        clear_qubit(err, q);
        break;
      }
      default:
        conjugate_by_gate(err, g);
        break;
    }
    if (loc.op_index == i && (loc.kind == FaultLocation::Kind::AfterGate1 ||
                              loc.kind == FaultLocation::Kind::AfterGate2 ||
                              loc.kind == FaultLocation::Kind::AfterReset))
      inject();
  }

  effect.residual = PauliOp::hermitian(err.x.slice(0, gadget.data_qubits),
                                       err.z.slice(0, gadget.data_qubits),
                                       err.is_hermitian() && err.negative());
  return effect;
}

bool is_detectable(const PauliOp& err, bool any_flag_flip, const StabilizerCode& code) {
  if (any_flag_flip) return true;
  for (const PauliOp& s : code.stabilizers)
    if (!commutes(err, s)) return true;  // non-zero syndrome
  // Zero syndrome: harmless iff the residual is a stabilizer element.
  return gf2_solve(code.stabilizer_matrix(), err.symplectic_vector()).has_value();
}

FaultReport check_fault_tolerance(const GadgetCircuit& gadget, const StabilizerCode& code) {
  if (gadget.data_qubits != code.n)
    throw std::invalid_argument("gadget/code qubit count mismatch");
  FaultReport report;
  const auto locations = fault_locations(gadget);
  report.total_locations = locations.size();
  for (const auto& loc : locations) {
    for (std::size_t f = 0; f < loc.fault_count(); ++f) {
      ++report.total_faults;
      const FaultEffect effect = propagate_fault(gadget, loc, f);
      if (!is_detectable(effect.residual, effect.any_flip(), code))
        report.undetectable.push_back({loc, f, effect.residual});
    }
  }
  report.verdict = report.undetectable.empty();
  return report;
}

namespace {

std::vector<PauliOp> distinct_undetectable(const FaultReport& report) {
  std::vector<PauliOp> out;
  std::map<BitVector, bool> seen;
  for (const auto& u : report.undetectable) {
    const BitVector key = u.residual.symplectic_vector();
    if (seen.emplace(key, true).second) out.push_back(u.residual);
  }
  return out;
}

// Greedy guard selection: each guard anticommutes with as many of the
// still-uncovered errors as a consistent GF(2) system allows. Each guard
// gets its own flag, so coverage combines as OR across guards.
std::vector<PauliOp> select_guards(const std::vector<PauliOp>& bad, std::size_t n,
                                   std::size_t max_guards) {
  const BitMatrix omega = symplectic_form(n);
  std::vector<bool> covered(bad.size(), false);
  std::vector<PauliOp> guards;
  std::size_t remaining = bad.size();
  while (remaining > 0) {
    if (guards.size() >= max_guards)
      throw std::runtime_error("guard search bound exceeded");
    std::vector<BitVector> rows;
    std::vector<std::size_t> newly;
    for (std::size_t i = 0; i < bad.size(); ++i) {
      if (covered[i]) continue;
      rows.push_back(omega * bad[i].symplectic_vector());
      BitMatrix sys(rows.size(), 2 * n);
      BitVector rhs(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        sys.set_row(r, rows[r]);
        rhs.set(r, true);
      }
      if (gf2_solve(sys, rhs)) {
        newly.push_back(i);
      } else {
        rows.pop_back();
      }
    }
    if (newly.empty())
      throw std::runtime_error("no guard can cover the remaining errors");
    BitMatrix sys(rows.size(), 2 * n);
    BitVector rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      sys.set_row(r, rows[r]);
      rhs.set(r, true);
    }
    guards.push_back(PauliOp::from_symplectic(gf2_solve(sys, rhs)->particular));
    for (std::size_t i : newly) {
      covered[i] = true;
      --remaining;
    }
  }
  return guards;
}

std::vector<std::vector<std::size_t>> candidate_orders(std::size_t n,
                                                       std::size_t max_orders) {
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> ascending;
  for (std::size_t q = 1; q <= n; ++q) ascending.push_back(q);
  orders.push_back(ascending);
  std::vector<std::size_t> descending(ascending.rbegin(), ascending.rend());
  orders.push_back(descending);
  for (std::size_t shift = 1; orders.size() < max_orders && shift < n; ++shift) {
    std::vector<std::size_t> rotated(ascending.begin() + static_cast<long>(shift),
                                     ascending.end());
    rotated.insert(rotated.end(), ascending.begin(),
                   ascending.begin() + static_cast<long>(shift));
    orders.push_back(rotated);
  }
  orders.resize(std::min(orders.size(), max_orders));
  return orders;
}

}  // namespace

GuardSearchResult find_guards(const GateSequence& circuit, const StabilizerCode& code,
                              const GuardSearchOptions& options) {
  GuardSearchResult result;
  result.gadget = bare_gadget(circuit, code.n);
  result.report = check_fault_tolerance(result.gadget, code);
  if (result.report.verdict) return result;  // already fault-tolerant

  // Candidate sandwich windows: the whole circuit, plus (optionally) the
  // tight window around the dangerous fault locations.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> windows{std::nullopt};
  if (options.propagate_inward) {
    std::size_t lo = circuit.gates.size(), hi = 0;
    for (const auto& u : result.report.undetectable) {
      const std::size_t at =
          u.location.op_index == SIZE_MAX ? 0 : u.location.op_index;
      lo = std::min(lo, at);
      hi = std::max(hi, at + 1);
    }
    if (lo > 0 || hi < circuit.gates.size())
      windows.insert(windows.begin(), std::make_pair(lo, hi));
  }

  for (const bool two_flags : {false, true}) {
    for (const auto& window : windows) {
      // Guards must anticommute with the errors as they stand at the end
      // of the sandwich, not at the end of the circuit.
      GateSequence suffix;
      suffix.n = circuit.n;
      if (window)
        suffix.gates.assign(circuit.gates.begin() + static_cast<long>(window->second),
                            circuit.gates.end());
      std::vector<PauliOp> bad = distinct_undetectable(result.report);
      if (window)
        for (auto& e : bad) e = backpropagate(suffix, e);
      std::vector<PauliOp> guards;
      try {
        guards = select_guards(bad, code.n, options.max_guards);
      } catch (const std::runtime_error&) {
        continue;
      }
      for (const auto& order : candidate_orders(code.n, options.max_order_retries)) {
        GadgetOptions gopt;
        gopt.two_flags = two_flags;
        gopt.qubit_order = order;
        gopt.window = window;
        GadgetCircuit gadget = build_flag_gadget(circuit, code, guards, gopt);
        FaultReport report = check_fault_tolerance(gadget, code);
        if (report.verdict) {
          result.guards = std::move(guards);
          result.gadget = std::move(gadget);
          result.report = std::move(report);
          return result;
        }
      }
    }
  }
  throw std::runtime_error("no fault-tolerant gadget found within the search bounds");
}

}  // namespace lcs
