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

// Acceptance suite: one pass/fail line per criterion. Long-running checks
// (the 12-hour optimality hunts) only run with --long.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>

#include "lcs/compile.hpp"
#include "lcs/ft.hpp"
#include "test_util.hpp"

using namespace lcs;

namespace {

int failures = 0;

void criterion(const char* name, const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%-4s %-58s %8.1fs%s%s\n", ok ? "PASS" : "FAIL", name, dt,
              error.empty() ? "" : "  error: ", error.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool expect(bool condition, const char* what) {
  if (!condition) std::printf("     .. failed: %s\n", what);
  return condition;
}

// ---- criterion 1: gauge counting --------------------------------------

bool gauge_counting() {
  bool ok = expect(freedom_count(4, 2) == 12288, "freedom_count(4,2) == 12288");
  BigInt p57 = 1;
  for (int i = 0; i < 57; ++i) p57 *= 10;
  const BigInt tt = freedom_count(12, 2);
  ok &= expect(tt > 14 * p57 && tt < 16 * p57, "freedom_count(12,2) in (1.4e58, 1.6e58)");
  for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 0}, {2, 1}, {3, 1}, {3, 2}}) {
    // Exhaustive enumeration over all free template entries, counting the
    // symplectic completions.
    const FreedomTemplate tmpl{n, k};
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t r = 0; r < 2 * n; ++r)
      for (std::size_t c = 0; c < 2 * n; ++c)
        if (!tmpl.fixed_entry(r, c)) free_cells.emplace_back(r, c);
    BitMatrix base(2 * n, 2 * n);
    for (std::size_t r = 0; r < 2 * n; ++r)
      for (std::size_t c = 0; c < 2 * n; ++c)
        if (tmpl.fixed_entry(r, c) && *tmpl.fixed_entry(r, c)) base.set(r, c, true);
    std::size_t matching = 0;
    for (std::size_t bits = 0; bits < (std::size_t(1) << free_cells.size()); ++bits) {
      BitMatrix m = base;
      for (std::size_t i = 0; i < free_cells.size(); ++i)
        if ((bits >> i) & 1) m.set(free_cells[i].first, free_cells[i].second, true);
      if (is_symplectic(m)) ++matching;
    }
    ok &= expect(BigInt(matching) == freedom_count(n, k),
                 "exhaustive template count equals the formula");
  }
  return ok;
}

// ---- criterion 2: factored count ---------------------------------------

bool factored_count() {
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto f = freedom_count_factored(n, k);
      if (f[0] * f[1] * f[2] != freedom_count(n, k)) return false;
    }
  return true;
}

// ---- criterion 3: logical group size -----------------------------------

bool logical_group_size() {
  return lcs::testing::all_symplectic(2).size() == 720;
}

// ---- criterion 4: iceberg compilation sample ---------------------------

bool iceberg_sample() {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const ConnectivityGraph ring = conn_ring(4);
  const auto group = lcs::testing::all_symplectic(2);
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  std::size_t total_cz = 0;
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const LogicalGate target = LogicalGate::from_symplectic(group[pick(rng)]);
    const CompileOutcome out = compile(code, target, 3, ring, Budget{600.0});
    if (!out.found() || !out.result->report.passed() || out.result->cz_count > 4) {
      std::printf("     .. sample %d: status=%s cz=%zu\n", i, to_string(out.status),
                  out.found() ? out.result->cz_count : SIZE_MAX);
      ok = false;
      continue;
    }
    total_cz += out.result->cz_count;
  }
  const double mean = static_cast<double>(total_cz) / 20.0;
  std::printf("     .. sample mean CZ count: %.2f\n", mean);
  return ok && expect(mean <= 3.5, "sample mean <= 3.5");
}

// ---- criterion 5: [[8,3,2]] logical S ----------------------------------

bool color_code_s_gate() {
  const auto t0 = std::chrono::steady_clock::now();
  const CompileOutcome out = compile(builtin_code("color-8-3-2"),
                                     LogicalGate::from_spec("S@1", 3), 1, conn_cube8(),
                                     Budget{55.0});
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return expect(out.found(), "feasible") &&
         expect(out.result->report.passed(), "verified") &&
         expect(out.result->cz_count == 1, "one CZ") && expect(dt < 60.0, "under 60 s");
}

// ---- criterion 6 (long): [[8,3,2]] logical H optimality ------------------

bool color_code_h_optimal() {
  const CompileOutcome out = compile(builtin_code("color-8-3-2"),
                                     LogicalGate::from_spec("H@1", 3), 3, conn_cube8(),
                                     Budget{12 * 3600.0});
  if (!out.found() || !out.result->report.passed()) return false;
  std::printf("     .. status=%s cz=%zu\n", to_string(out.result->status),
              out.result->cz_count);
  if (out.result->status == SolveStatus::Optimal) return out.result->cz_count == 7;
  return out.result->cz_count <= 13;
}

// ---- criterion 7: [[12,2,3]] logical CX --------------------------------

bool twisted_toric_cx(double budget) {
  const CompileOutcome out = compile(builtin_code("twisted-toric-12-2-3"),
                                     LogicalGate::from_spec("CX@2,1", 2), 2,
                                     conn_grid(3, 4), Budget{budget});
  if (!out.found()) return false;
  std::printf("     .. status=%s cz=%zu\n", to_string(out.result->status),
              out.result->cz_count);
  bool ok = out.result->report.passed() && out.result->report.sign_correct;
  if (out.result->status == SolveStatus::Optimal) ok &= out.result->cz_count == 11;
  return ok;
}

// ---- criterion 8: theorem-level bijection -------------------------------

bool gauge_bijection() {
  std::mt19937 rng(8);
  // Random [[2,1]] code from a random symplectic encoding.
  const SymplecticMap e = lcs::testing::random_symplectic(rng, 2);
  StabilizerCode code;
  code.n = 2;
  code.k = 1;
  code.logical_x = {PauliOp::from_symplectic(e.mat.column(0))};
  code.logical_z = {PauliOp::from_symplectic(e.mat.column(2))};
  code.stabilizers = {PauliOp::from_symplectic(e.mat.column(3))};
  if (!validate(code).ok) return false;

  const EncodingMatrix enc = build_encoding(code);
  const BitMatrix e_inv = *gf2_inverse(enc.e);
  const LogicalGate target = LogicalGate::from_spec("H@1;S@1", 1);
  const BitMatrix c = target.symplectic();
  BitMatrix c_prime = BitMatrix::identity(4);
  c_prime.set(0, 0, c.get(0, 0));
  c_prime.set(0, 2, c.get(0, 1));
  c_prime.set(2, 0, c.get(1, 0));
  c_prime.set(2, 2, c.get(1, 1));

  std::set<BitMatrix> images;
  bool ok = true;
  for (const auto& f : enumerate_freedom(2, 1)) {
    const BitMatrix a = enc.e * c_prime * f * e_inv;
    images.insert(a);
    ok &= implements_target(SymplecticMap{BitMatrix(a)}, code, target).passed();
  }
  ok &= expect(BigInt(images.size()) == freedom_count(2, 1), "map is injective");

  std::size_t outside = 0, inside = 0;
  for (const auto& m : lcs::testing::all_symplectic(2)) {
    const bool passes =
        implements_target(SymplecticMap{BitMatrix(m)}, code, target).passed();
    if (passes && images.count(m) == 0) ++outside;
    if (passes) ++inside;
  }
  ok &= expect(outside == 0, "no implementation outside the gauge orbit");
  ok &= expect(inside == images.size(), "every gauge image verifies");
  return ok;
}

// ---- criterion 9: fault tolerance of the gadgeted H --------------------

bool gadgeted_h_fault_tolerance() {
  const StabilizerCode code = builtin_code("color-8-3-2");
  const LogicalGate target = LogicalGate::from_spec("H@1", 3);
  const CompileOutcome out =
      compile(code, target, 3, conn_cube8(), Budget{300.0});
  if (!expect(out.found() && out.result->report.passed(), "compiled and verified"))
    return false;
  std::printf("     .. compiled H1: status=%s cz=%zu\n", to_string(out.result->status),
              out.result->cz_count);
  const GateSequence circuit = flatten(out.result->circuit);

  const GuardSearchResult guarded = find_guards(circuit, code);
  std::printf("     .. guards=%zu flags=%zu faults=%zu\n", guarded.guards.size(),
              guarded.gadget.flag_qubits, guarded.report.total_faults);
  bool ok = expect(guarded.report.verdict, "gadget passes exhaustive enumeration");
  ok &= expect(!guarded.guards.empty(), "bare circuit needed a flag");

  // Fault-count bookkeeping: 3 per single-qubit location, 15 per 2q gate.
  std::size_t g1 = 0, g2 = 0, m = 0, r = 0;
  for (const Gate& g : guarded.gadget.ops.gates) {
    if (g.kind == GateKind::TICK) continue;
    if (g.kind == GateKind::MX || g.kind == GateKind::MZ)
      ++m;
    else if (g.kind == GateKind::R0 || g.kind == GateKind::RP)
      ++r;
    else if (g.is_two_qubit())
      ++g2;
    else
      ++g1;
  }
  ok &= expect(guarded.report.total_faults == 3 * (g1 + m + r + code.n) + 15 * g2,
               "fault count bookkeeping");

  // Mutation: delete the first flag measurement.
  GadgetCircuit no_measure = guarded.gadget;
  for (std::size_t i = no_measure.ops.gates.size(); i-- > 0;)
    if (no_measure.ops.gates[i].kind == GateKind::MX) {
      no_measure.ops.gates.erase(no_measure.ops.gates.begin() + static_cast<long>(i));
      break;
    }
  ok &= expect(!check_fault_tolerance(no_measure, code).verdict,
               "deleting a flag measurement flips the verdict");

  // Mutation: replace the guards with a Pauli that catches nothing.
  const FaultReport bare = check_fault_tolerance(bare_gadget(circuit, code.n), code);
  PauliOp commuting = PauliOp::identity(code.n);
  for (std::size_t q = 0; q < code.n && commuting.is_identity(); ++q) {
    PauliOp candidate(BitVector(code.n), BitVector(code.n), 0);
    candidate.z.set(q, true);
    bool commutes_all = true;
    for (const auto& u : bare.undetectable)
      commutes_all &= commutes(candidate, u.residual);
    if (commutes_all) commuting = candidate;
  }
  if (!commuting.is_identity()) {
    const GadgetCircuit swapped = build_flag_gadget(circuit, code, {commuting}, {});
    ok &= expect(!check_fault_tolerance(swapped, code).verdict,
                 "swapping the guard flips the verdict");
  } else {
    // Fall back: drop all guards entirely.
    ok &= expect(!bare.verdict, "bare circuit is not fault tolerant");
  }
  return ok;
}

// ---- criterion 10: baseline expressivity --------------------------------

bool baseline_expressivity() {
  std::mt19937 rng(10);
  lcs::testing::Rng trng(10);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 5;  // 2..6
    // Random connected graph: a random spanning tree plus random extras.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 2; v <= n; ++v)
      edges.emplace_back(1 + rng() % (v - 1), v);
    for (std::size_t extra = 0; extra < n / 2; ++extra) {
      const std::size_t u = 1 + rng() % n, v = 1 + rng() % n;
      if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    const ConnectivityGraph con = make_connectivity(n, edges);
    const SymplecticMap u = lcs::testing::random_symplectic(trng, n);
    const LayeredCircuit c = baseline_compile(u, con);
    if (circuit_symplectic(c).mat != u.mat) return false;
    for (const auto& gamma : c.czls)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (gamma.get(a, b) && !con.adj.get(a, b)) return false;
  }
  return true;
}

// ---- criterion 11: verifier mutation suite ------------------------------

bool verifier_mutations() {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const auto group = lcs::testing::all_symplectic(2);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);

  static const GateKind one_q[] = {GateKind::X,      GateKind::Y,     GateKind::Z,
                                   GateKind::H,      GateKind::S,     GateKind::S_DAG,
                                   GateKind::SQRT_X, GateKind::SQRT_X_DAG};
  std::size_t total = 0, rejected = 0, passes = 0;
  for (int i = 0; i < 50; ++i) {
    const LogicalGate target = LogicalGate::from_symplectic(group[pick(rng)]);
    const CompileOutcome out =
        compile(code, target, 3, conn_complete(4), Budget{120.0});
    if (!out.found()) return false;
    GateSequence circuit = flatten(out.result->circuit);

    // One single-gate mutation per compiled circuit. Replacements come
    // from a different symplectic class; same-class swaps (X for Z, S for
    // S_DAG) only probe the intentional Pauli quotient.
    std::vector<std::size_t> gate_indices;
    for (std::size_t g = 0; g < circuit.gates.size(); ++g)
      if (circuit.gates[g].kind != GateKind::TICK) gate_indices.push_back(g);
    const std::size_t at = gate_indices[rng() % gate_indices.size()];
    GateSequence mutated = circuit;
    Gate& gate = mutated.gates[at];
    if (gate.is_two_qubit()) {
      mutated.gates.erase(mutated.gates.begin() + static_cast<long>(at));
    } else {
      GateKind replacement = gate.kind;
      while (one_qubit_action(replacement).symplectic ==
             one_qubit_action(gate.kind).symplectic)
        replacement = one_q[rng() % 8];
      gate.kind = replacement;
    }
    ++total;
    const auto report = implements_target(mutated, code, target, false);
    if (!report.passed()) {
      if (report.failures.empty()) return false;  // rejections must be named
      ++rejected;
    } else {
      ++passes;
      // A legitimate pass is gauge equivalence: the mutated circuit still
      // implements the target, with a well-formed gauge.
      const auto gauge = extract_gauge(tableau_of(mutated).symplectic(), code, target);
      if (!reduced_freedom_template(target.symplectic(), code.n).matches(gauge.f_prime))
        return false;
    }
  }
  std::printf("     .. %zu/%zu mutations rejected (%zu gauge-equivalent passes)\n",
              rejected, total, passes);
  return static_cast<double>(rejected) / static_cast<double>(total) >= 0.95;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_mode = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long") == 0) long_mode = true;

  criterion("1. gauge counting matches the closed form", gauge_counting);
  criterion("2. factored count equals the closed form up to n = 8", factored_count);
  criterion("3. binary symplectic group on two qubits has 720 elements",
            logical_group_size);
  criterion("4. iceberg sample: 20 gates, ring, length 3, max 4 CZs", iceberg_sample);
  criterion("5. [[8,3,2]] logical S: one CZ on the cube in under 60 s",
            color_code_s_gate);
  if (long_mode)
    criterion("6. [[8,3,2]] logical H: optimal 7 CZs (long)", color_code_h_optimal);
  else
    std::printf("SKIP 6. [[8,3,2]] logical H optimality hunt (rerun with --long)\n");
  criterion("7. [[12,2,3]] logical CX: verified circuit on the 3x4 grid",
            [&] { return twisted_toric_cx(long_mode ? 3600.0 : 900.0); });
  criterion("8. gauge-orbit bijection on a random [[2,1]] code", gauge_bijection);
  criterion("9. gadgeted [[8,3,2]] logical H survives every single fault",
            gadgeted_h_fault_tolerance);
  criterion("10. baseline round-trips 100 random maps on random graphs",
            baseline_expressivity);
  criterion("11. verifier rejects at least 95% of single-gate mutations",
            verifier_mutations);

  std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
