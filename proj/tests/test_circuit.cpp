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

#include "doctest.h"
#include "lcs/circuit.hpp"
#include "test_util.hpp"

using namespace lcs;
using lcs::testing::Rng;

TEST_SUITE_BEGIN("circuit");

namespace {

LayeredCircuit random_layered(Rng& rng, std::size_t n, std::size_t l) {
  LayeredCircuit c = LayeredCircuit::empty(n, l);
  const auto& classes = SingleQubitClifford::all();
  for (auto& layer : c.scls)
    for (auto& entry : layer) entry = classes[rng() % classes.size()];
  for (auto& gamma : c.czls)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 2) {
          gamma.set(u, v, true);
          gamma.set(v, u, true);
        }
  return c;
}

}  // namespace

TEST_CASE("gate sequence parse and serialize") {
  const std::string text =
      "# a comment\n"
      "H 3\n"
      "S 2\n"
      "CZ 1 2\n"
      "TICK\n"
      "CX 5 9 # control first\n"
      "MX 9\n";
  const GateSequence seq = parse_gate_sequence(text);
  CHECK(seq.n == 9);
  REQUIRE(seq.gates.size() == 6);
  CHECK(seq.gates[0] == Gate{GateKind::H, 3, 0});
  CHECK(seq.gates[2] == Gate{GateKind::CZ, 1, 2});
  CHECK(seq.gates[3] == Gate{GateKind::TICK, 0, 0});
  // Bit-exact round trip.
  CHECK(serialize_gate_sequence(parse_gate_sequence(serialize_gate_sequence(seq))) ==
        serialize_gate_sequence(seq));
  CHECK_THROWS(parse_gate_sequence("H 0\n"));
  CHECK_THROWS(parse_gate_sequence("CZ 1 1\n"));
  CHECK_THROWS(parse_gate_sequence("BANANA 1\n"));
}

TEST_CASE("scl symplectic") {
  std::vector<SingleQubitClifford> identity_layer(3);
  CHECK(scl_symplectic(identity_layer).mat == BitMatrix::identity(6));

  std::vector<SingleQubitClifford> hadamards(3, SingleQubitClifford{0, 1, 1, 0});
  CHECK(scl_symplectic(hadamards).mat == symplectic_form(3));

  // S on qubit 1 of 2 puts the only off-diagonal bit at the zx block (0,0).
  std::vector<SingleQubitClifford> s_layer(2);
  s_layer[0] = SingleQubitClifford{1, 0, 1, 1};
  const BitMatrix m = scl_symplectic(s_layer).mat;
  CHECK(m.get(2, 0));
  BitMatrix expected = BitMatrix::identity(4);
  expected.set(2, 0, true);
  CHECK(m == expected);
}

TEST_CASE("czl symplectic") {
  CHECK(czl_symplectic(BitMatrix(3, 3)).mat == BitMatrix::identity(6));

  BitMatrix gamma(2, 2);
  gamma.set(0, 1, true);
  gamma.set(1, 0, true);
  const BitMatrix m = czl_symplectic(gamma).mat;
  BitMatrix expected = BitMatrix::identity(4);
  expected.set(2, 1, true);
  expected.set(3, 0, true);
  CHECK(m == expected);

  BitMatrix bad(2, 2);
  bad.set(0, 1, true);
  CHECK_THROWS_AS(czl_symplectic(bad), std::invalid_argument);
  BitMatrix diag(2, 2);
  diag.set(0, 0, true);
  CHECK_THROWS_AS(czl_symplectic(diag), std::invalid_argument);
}

TEST_CASE("layer maps are symplectic for random inputs") {
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    const LayeredCircuit c = random_layered(rng, 4, 2);
    for (const auto& gamma : c.czls) CHECK(is_symplectic(czl_symplectic(gamma).mat));
    for (const auto& layer : c.scls) CHECK(is_symplectic(scl_symplectic(layer).mat));
    CHECK(is_symplectic(circuit_symplectic(c).mat));
  }
}

TEST_CASE("identity circuit") {
  const LayeredCircuit c = LayeredCircuit::empty(3, 0);
  CHECK(circuit_symplectic(c).mat == BitMatrix::identity(6));
  CHECK(flatten(c).gates.empty());
}

TEST_CASE("swap decomposition from hadamards and CZs") {
  // (H x I) CZ (H x H) CZ (H x H) CZ (H x I) realizes SWAP.
  const SingleQubitClifford h{0, 1, 1, 0};
  LayeredCircuit c = LayeredCircuit::empty(2, 3);
  c.scls[0][0] = h;                       // rightmost factor acts first
  c.scls[1][0] = h;
  c.scls[1][1] = h;
  c.scls[2][0] = h;
  c.scls[2][1] = h;
  c.scls[3][0] = h;
  for (auto& gamma : c.czls) {
    gamma.set(0, 1, true);
    gamma.set(1, 0, true);
  }
  BitMatrix swap(4, 4);
  swap.set(0, 1, true);
  swap.set(1, 0, true);
  swap.set(2, 3, true);
  swap.set(3, 2, true);
  CHECK(circuit_symplectic(c).mat == swap);
}

TEST_CASE("flatten emits one CZ per edge") {
  LayeredCircuit c = LayeredCircuit::empty(3, 1);
  c.czls[0].set(0, 2, true);
  c.czls[0].set(2, 0, true);
  const GateSequence seq = flatten(c);
  std::size_t czs = 0, others = 0;
  for (const auto& g : seq.gates) {
    if (g.kind == GateKind::CZ)
      ++czs;
    else if (g.kind != GateKind::TICK)
      ++others;
  }
  CHECK(czs == 1);
  CHECK(others == 0);
}

TEST_CASE("flatten round trip preserves the symplectic map") {
  Rng rng(32);
  for (int i = 0; i < 15; ++i) {
    const LayeredCircuit c = random_layered(rng, 4, 3);
    CHECK(tableau_of(flatten(c)).symplectic().mat == circuit_symplectic(c).mat);
  }
}

TEST_CASE("flattened files re-parse to the same sequence") {
  Rng rng(33);
  const LayeredCircuit c = random_layered(rng, 4, 2);
  const GateSequence seq = flatten(c);
  CHECK(parse_gate_sequence(serialize_gate_sequence(seq), seq.n) == seq);
}

TEST_CASE("pauli frame flattens to trailing Pauli gates") {
  LayeredCircuit c = LayeredCircuit::empty(3, 0);
  c.pauli_frame = PauliOp::from_string("XIZ");
  const GateSequence seq = flatten(c);
  REQUIRE(seq.gates.size() == 2);
  CHECK(seq.gates[0] == Gate{GateKind::X, 1, 0});
  CHECK(seq.gates[1] == Gate{GateKind::Z, 3, 0});
}

TEST_CASE("concatenation multiplies the maps") {
  Rng rng(34);
  for (int i = 0; i < 10; ++i) {
    const LayeredCircuit a = random_layered(rng, 3, 2);
    const LayeredCircuit b = random_layered(rng, 3, 1);
    const LayeredCircuit joined = concat(a, b);
    CHECK(joined.length() == 3);
    CHECK(circuit_symplectic(joined).mat ==
          (circuit_symplectic(b) * circuit_symplectic(a)).mat);
  }
}

TEST_CASE("tableau of rejects measurements") {
  GateSequence seq;
  seq.n = 1;
  seq.gates = {Gate{GateKind::MX, 1, 0}};
  CHECK_THROWS_AS(tableau_of(seq), std::invalid_argument);
}

TEST_SUITE_END();
