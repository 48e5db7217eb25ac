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

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lcs/compile.hpp"
#include "lcs/sat/totalizer.hpp"
#include "test_util.hpp"

using namespace lcs;
using lcs::testing::Rng;

TEST_SUITE_BEGIN("compile");

namespace {

StabilizerCode trivial_code_1() {
  StabilizerCode code;
  code.n = code.k = 1;
  code.logical_x = {PauliOp::from_string("X")};
  code.logical_z = {PauliOp::from_string("Z")};
  return code;
}

ReducedEncoding encoding_of(const StabilizerCode& code) {
  return reduce_encoding(build_encoding(code));
}

// Brute force over all SCL-class assignments: is the target reachable at
// ansatz length zero?
bool scl_only_feasible(const StabilizerCode& code, const LogicalGate& target) {
  const ReducedEncoding enc = encoding_of(code);
  const auto tmpl = reduced_freedom_template(target.symplectic(), code.n);
  const auto& classes = SingleQubitClifford::all();
  std::vector<std::size_t> pick(code.n, 0);
  while (true) {
    std::vector<SingleQubitClifford> layer;
    for (std::size_t q = 0; q < code.n; ++q) layer.push_back(classes[pick[q]]);
    const BitMatrix a = scl_symplectic(layer).mat;
    const auto f = gf2_solve_matrix(enc.e_prime, a * enc.e_prime);
    if (f && tmpl.matches(*f)) return true;
    std::size_t q = 0;
    while (q < code.n && ++pick[q] == classes.size()) pick[q++] = 0;
    if (q == code.n) return false;
  }
}

}  // namespace

TEST_CASE("length-zero identity on the trivial code") {
  const StabilizerCode code = trivial_code_1();
  const SatInstance inst =
      encode(encoding_of(code), BitMatrix::identity(2), 0, conn_complete(1));
  const MinimizeResult r = minimize(inst, Budget{10.0});
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.cost == 0);
  const DecodedModel decoded = decode_model(inst, r.model);
  CHECK(circuit_symplectic(decoded.circuit).mat == BitMatrix::identity(2));
}

TEST_CASE("length-zero satisfiability matches SCL brute force") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const ReducedEncoding enc = encoding_of(code);
  for (const char* spec : {"CX@1,2", "H@1", "S@1", "H@1;H@2"}) {
    const LogicalGate target = LogicalGate::from_spec(spec, 2);
    const SatInstance inst = encode(enc, target.symplectic(), 0, conn_ring(4));
    const MinimizeResult r = minimize(inst, Budget{30.0});
    const bool sat_says = r.status == SolveStatus::Optimal;
    REQUIRE(r.status != SolveStatus::NoModel);
    CHECK(sat_says == scl_only_feasible(code, target));
  }
}

TEST_CASE("auxiliary variable count grows linearly in the ansatz length") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const ReducedEncoding enc = encoding_of(code);
  const LogicalGate target = LogicalGate::from_spec("CX@1,2", 2);
  std::vector<std::size_t> aux;
  for (std::size_t l = 1; l <= 3; ++l)
    aux.push_back(encode(enc, target.symplectic(), l, conn_ring(4)).aux_vars);
  CHECK(aux[2] - aux[1] == aux[1] - aux[0]);
}

TEST_CASE("decoded models satisfy the instance") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const SatInstance inst = encode(encoding_of(code),
                                  LogicalGate::from_spec("S@1", 2).symplectic(), 2,
                                  conn_line(4));
  const MinimizeResult r = minimize(inst, Budget{30.0});
  REQUIRE(!r.model.empty());
  CHECK(satisfies(inst, r.model));
}

TEST_CASE("compile a logical CX on the iceberg ring") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const CompileOutcome out = compile(code, LogicalGate::from_spec("CX@1,2", 2), 3,
                                     conn_ring(4), Budget{120.0});
  REQUIRE(out.found());
  const CompileResult& r = *out.result;
  CHECK(r.report.passed());
  CHECK(r.report.sign_correct);
  CHECK(r.cz_count <= 4);  // circular-connectivity worst case
  CHECK(r.circuit.pauli_frame.has_value());

  // Gauge consistency with the verifier's extraction.
  const auto gauge = extract_gauge(r.circuit, code, LogicalGate::from_spec("CX@1,2", 2));
  CHECK(gauge.f_prime == r.gauge.f_prime);

  // Hardware tailoring: every CZ edge is a device edge.
  const ConnectivityGraph ring = conn_ring(4);
  for (const auto& gamma : r.circuit.czls)
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = u + 1; v < 4; ++v)
        if (gamma.get(u, v)) CHECK(ring.adj.get(u, v));
}

TEST_CASE("a logical CZ on the iceberg code is free of physical CZs") {
  // The transversal-S pattern leaves only single-qubit gates; the cost
  // function counts CZs alone.
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const CompileOutcome out = compile(code, LogicalGate::from_spec("CZ@1,2", 2), 2,
                                     conn_ring(4), Budget{60.0});
  REQUIRE(out.found());
  CHECK(out.result->status == SolveStatus::Optimal);
  CHECK(out.result->cz_count == 0);
}

TEST_CASE("optimality certificates are reproducible") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const ReducedEncoding enc = encoding_of(code);
  // A logical Hadamard maps an X-type logical onto a Z-type one, which no
  // single-qubit layer can do; the minimum is at least one CZ.
  const LogicalGate target = LogicalGate::from_spec("H@1", 2);
  const SatInstance inst = encode(enc, target.symplectic(), 3, conn_ring(4));
  const MinimizeResult r = minimize(inst, Budget{300.0});
  REQUIRE(r.status == SolveStatus::Optimal);
  REQUIRE(r.cost >= 1);

  sat::Solver solver;
  for (std::int32_t v = 0; v < inst.cnf.num_vars; ++v) solver.new_var();
  for (const auto& c : inst.cnf.clauses) REQUIRE(solver.add_clause(c));
  sat::Totalizer tot(solver, inst.cost_lits);
  CHECK(solver.solve({tot.at_most_assumption(r.cost - 1)}) ==
        sat::Solver::Result::Unsat);
  CHECK(solver.solve({tot.at_most_assumption(r.cost)}) == sat::Solver::Result::Sat);
}

TEST_CASE("deepening finds the identity at length zero") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const CompileOutcome out = compile_deepening(code, LogicalGate::identity(2), 3,
                                               conn_ring(4), Budget{30.0});
  REQUIRE(out.found());
  CHECK(out.length == 0);
  CHECK(out.result->cz_count == 0);
  CHECK(out.status == SolveStatus::Optimal);
}

TEST_CASE("cost never increases with deeper ansatz") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const LogicalGate target = LogicalGate::from_spec("S@1", 2);
  std::size_t previous = SIZE_MAX;
  for (std::size_t l = 1; l <= 3; ++l) {
    const CompileOutcome out = compile(code, target, l, conn_complete(4), Budget{60.0});
    if (!out.found()) continue;
    REQUIRE(out.result->status == SolveStatus::Optimal);
    CHECK(out.result->cz_count <= previous);
    previous = out.result->cz_count;
  }
  CHECK(previous != SIZE_MAX);
}

TEST_CASE("zero budget exhausts immediately") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const CompileOutcome out = compile_deepening(code, LogicalGate::from_spec("H@1", 2), 2,
                                               conn_ring(4), Budget{0.0});
  CHECK(!out.found());
  CHECK(out.status == SolveStatus::NoModel);
}

TEST_CASE("dimacs export of an instance round trips") {
  const StabilizerCode code = trivial_code_1();
  const SatInstance inst =
      encode(encoding_of(code), BitMatrix::identity(2), 1, conn_complete(1));
  std::ostringstream out;
  sat::write_dimacs(out, inst.cnf);
  std::istringstream in(out.str());
  const sat::Cnf back = sat::read_dimacs(in);
  CHECK(back.num_vars == inst.cnf.num_vars);
  CHECK(back.clauses == inst.cnf.clauses);
}

TEST_CASE("externally produced model lines decode to the same circuit") {
  const StabilizerCode code = builtin_code("iceberg-4-2-2");
  const SatInstance inst = encode(encoding_of(code),
                                  LogicalGate::from_spec("S@1", 2).symplectic(), 1,
                                  conn_ring(4));
  const MinimizeResult r = minimize(inst, Budget{30.0});
  REQUIRE(!r.model.empty());
  // Emit solver-style value lines and parse them back.
  std::ostringstream lines;
  lines << "s SATISFIABLE\nv";
  for (std::int32_t v = 0; v < inst.cnf.num_vars; ++v)
    lines << ' ' << (r.model[static_cast<std::size_t>(v)] ? v + 1 : -(v + 1));
  lines << " 0\n";
  std::istringstream in(lines.str());
  const auto parsed = sat::parse_model_lines(in, inst.cnf.num_vars);
  REQUIRE(parsed);
  CHECK(satisfies(inst, *parsed));
  const DecodedModel a = decode_model(inst, r.model);
  const DecodedModel b = decode_model(inst, *parsed);
  CHECK(circuit_symplectic(a.circuit).mat == circuit_symplectic(b.circuit).mat);
}

TEST_CASE("baseline: identity input gives an empty circuit") {
  const LayeredCircuit c = baseline_compile(SymplecticMap::identity(3), conn_line(3));
  CHECK(c.cz_count() == 0);
  CHECK(circuit_symplectic(c).mat == BitMatrix::identity(6));
}

TEST_CASE("baseline: SWAP on a two-qubit line uses three CZ layers") {
  BitMatrix swap(4, 4);
  swap.set(0, 1, true);
  swap.set(1, 0, true);
  swap.set(2, 3, true);
  swap.set(3, 2, true);
  const LayeredCircuit c = baseline_compile(SymplecticMap{BitMatrix(swap)}, conn_line(2));
  CHECK(circuit_symplectic(c).mat == swap);
  CHECK(c.length() == 3);
  CHECK(c.cz_count() == 3);
}

TEST_CASE("baseline round trips random symplectics on a line") {
  Rng rng(61);
  const ConnectivityGraph line = conn_line(4);
  for (int i = 0; i < 15; ++i) {
    const SymplecticMap u = lcs::testing::random_symplectic(rng, 4);
    const LayeredCircuit c = baseline_compile(u, line);
    CHECK(circuit_symplectic(c).mat == u.mat);
    for (const auto& gamma : c.czls)
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
          if (gamma.get(a, b)) CHECK(line.adj.get(a, b));
  }
}

TEST_CASE("baseline rejects disconnected graphs") {
  const ConnectivityGraph disconnected = make_connectivity(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(baseline_compile(SymplecticMap::identity(4), disconnected),
                  std::invalid_argument);
}

TEST_CASE("connectivity presets") {
  CHECK(conn_star(5).edge_count() == 4);
  CHECK(conn_line(5).edge_count() == 4);
  CHECK(conn_ring(5).edge_count() == 5);
  CHECK(conn_grid(3, 4).edge_count() == 17);
  CHECK(conn_cube8().edge_count() == 12);
  CHECK(conn_complete(5).edge_count() == 10);
  CHECK(parse_connectivity("grid:3x4").edge_count() == 17);
  CHECK(parse_connectivity("cube8").n == 8);
  CHECK(conn_grid(3, 4).is_connected());
  CHECK(conn_cube8().is_connected());
}

TEST_SUITE_END();
