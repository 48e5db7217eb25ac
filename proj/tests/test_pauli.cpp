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

#include "dense_oracle.hpp"
#include "doctest.h"
#include "lcs/pauli.hpp"
#include "test_util.hpp"

using namespace lcs;
using namespace lcs::testing;

TEST_SUITE_BEGIN("pauli");

namespace {

PauliOp pauli_on(std::size_t n, std::size_t qubit, int which, int phase) {
  // which: 0 I, 1 X, 2 Y, 3 Z
  BitVector x(n), z(n);
  int q = phase;
  if (which == 1 || which == 2) x.set(qubit - 1, true);
  if (which == 2 || which == 3) z.set(qubit - 1, true);
  if (which == 2) q += 1;
  return PauliOp(x, z, q);
}

}  // namespace

TEST_CASE("string round trips") {
  for (const char* s : {"XXIZ", "+XYZI", "-ZZ", "iY", "-iXZ", "IIII"}) {
    const PauliOp p = PauliOp::from_string(s);
    const PauliOp q = PauliOp::from_string(p.to_string());
    CHECK(p == q);
  }
  CHECK(PauliOp::from_string("XXIZ").to_string() == "XXIZ");
  CHECK(PauliOp::from_string("-Y").to_string() == "-Y");
  CHECK_THROWS_AS(PauliOp::from_string("XQ"), std::invalid_argument);
}

TEST_CASE("multiplication matches the dense oracle") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const PauliOp a = random_pauli(rng, 2);
    const PauliOp b = random_pauli(rng, 2);
    CHECK(cm_close(pauli_matrix(a * b), cm_mul(pauli_matrix(a), pauli_matrix(b))));
  }
}

TEST_CASE("hermiticity matches squaring to the identity") {
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    const PauliOp p = random_pauli(rng, 2);
    const CMat m = pauli_matrix(p);
    const bool squares_to_plus_identity = cm_close(cm_mul(m, m), cm_identity(4));
    // i^q X Z is an involution exactly when it is Hermitian.
    CHECK(p.is_hermitian() == squares_to_plus_identity);
  }
}

TEST_CASE("commutation basics") {
  CHECK(!commutes(PauliOp::from_string("X"), PauliOp::from_string("Z")));
  CHECK(commutes(PauliOp::from_string("XX"), PauliOp::from_string("ZZ")));
}

TEST_CASE("commutation matches the matrix commutator") {
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    const PauliOp a = random_pauli(rng, 3);
    const PauliOp b = random_pauli(rng, 3);
    const CMat ab = cm_mul(pauli_matrix(a), pauli_matrix(b));
    const CMat ba = cm_mul(pauli_matrix(b), pauli_matrix(a));
    CHECK(commutes(a, b) == cm_close(ab, ba));
  }
}

TEST_CASE("every gate conjugation rule matches the dense oracle") {
  // One-qubit gates: all four Paulis, all four phases.
  for (GateKind k : {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z, GateKind::H,
                     GateKind::S, GateKind::S_DAG, GateKind::SQRT_X, GateKind::SQRT_X_DAG}) {
    for (int which = 0; which < 4; ++which)
      for (int phase = 0; phase < 4; ++phase) {
        PauliOp p = pauli_on(1, 1, which, phase);
        GateSequence seq;
        seq.n = 1;
        seq.gates = {Gate{k, 1, 0}};
        const CMat expected = conjugate_dense(seq, p);
        conjugate_by_gate(p, seq.gates[0]);
        CHECK(cm_close(pauli_matrix(p), expected));
      }
  }
  // Two-qubit gates: all sixteen Pauli pairs, both orientations.
  for (GateKind k : {GateKind::CZ, GateKind::CX, GateKind::CY}) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (const auto& [qa, qb] : {std::pair<int, int>{1, 2}, {2, 1}}) {
          PauliOp p = pauli_on(2, 1, a, 0) * pauli_on(2, 2, b, 0);
          GateSequence seq;
          seq.n = 2;
          seq.gates = {Gate{k, qa, qb}};
          const CMat expected = conjugate_dense(seq, p);
          conjugate_by_gate(p, seq.gates[0]);
          CHECK(cm_close(pauli_matrix(p), expected));
        }
  }
}

TEST_CASE("tableau conjugation matches dense conjugation including phase") {
  Rng rng(24);
  for (int i = 0; i < 25; ++i) {
    const GateSequence seq = random_gate_sequence(rng, 3, 15);
    const CliffordTableau t = tableau_of(seq);
    const PauliOp p = random_pauli(rng, 3);
    CHECK(cm_close(pauli_matrix(t.conjugate(p)), conjugate_dense(seq, p)));
  }
}

TEST_CASE("tableau composition is a homomorphism") {
  Rng rng(25);
  for (int i = 0; i < 10; ++i) {
    const GateSequence s1 = random_gate_sequence(rng, 3, 10);
    const GateSequence s2 = random_gate_sequence(rng, 3, 10);
    GateSequence joined = s1;
    joined.gates.insert(joined.gates.end(), s2.gates.begin(), s2.gates.end());
    CHECK(tableau_of(s1).then(tableau_of(s2)) == tableau_of(joined));
  }
}

TEST_CASE("tableau inverse") {
  Rng rng(26);
  for (int i = 0; i < 10; ++i) {
    const CliffordTableau t = tableau_of(random_gate_sequence(rng, 3, 20));
    CHECK(t.then(t.inverse()) == CliffordTableau::identity(3));
    CHECK(t.inverse().then(t) == CliffordTableau::identity(3));
  }
}

TEST_CASE("conjugation preserves commutation") {
  Rng rng(27);
  const CliffordTableau t = tableau_of(random_gate_sequence(rng, 4, 30));
  for (int i = 0; i < 20; ++i) {
    const PauliOp p = random_pauli(rng, 4);
    const PauliOp q = random_pauli(rng, 4);
    CHECK(commutes(p, q) == commutes(t.conjugate(p), t.conjugate(q)));
  }
}

TEST_CASE("textbook conjugations") {
  const CliffordTableau h = [] {
    CliffordTableau t(1);
    t.apply_gate(Gate{GateKind::H, 1, 0});
    return t;
  }();
  CHECK(h.conjugate(PauliOp::from_string("X")) == PauliOp::from_string("Z"));
  CHECK(h.conjugate(PauliOp::from_string("Y")) == PauliOp::from_string("-Y"));
  CHECK(h.conjugate(PauliOp::from_string("Z")) == PauliOp::from_string("X"));
}

TEST_CASE("all 24 one-qubit Cliffords have canonical words") {
  int seen = 0;
  for (const auto& cls : SingleQubitClifford::all()) {
    for (int signs = 0; signs < 4; ++signs) {
      const OneQubitAction action{cls, (signs & 1) != 0, (signs & 2) != 0};
      const auto word = canonical_word(action);
      CHECK(word.size() <= 2);
      // Re-derive the action from the word.
      PauliOp x = PauliOp::from_string("X"), z = PauliOp::from_string("Z");
      for (GateKind k : word) {
        conjugate_by_gate(x, Gate{k, 1, 0});
        conjugate_by_gate(z, Gate{k, 1, 0});
      }
      CHECK(x.x.get(0) == (cls.xx != 0));
      CHECK(x.z.get(0) == (cls.zx != 0));
      CHECK(z.x.get(0) == (cls.xz != 0));
      CHECK(z.z.get(0) == (cls.zz != 0));
      CHECK(x.negative() == action.x_negative);
      CHECK(z.negative() == action.z_negative);
      ++seen;
    }
  }
  CHECK(seen == 24);
}

TEST_CASE("sign bits track image signs") {
  CliffordTableau t(2);
  t.apply_gate(Gate{GateKind::X, 1, 0});  // X1: Z1 -> -Z1
  const BitVector bits = t.sign_bits();
  CHECK(!bits.get(0));
  CHECK(bits.get(2));
}

TEST_SUITE_END();
