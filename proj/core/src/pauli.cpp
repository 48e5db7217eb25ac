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

#include "lcs/pauli.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace lcs {

namespace {

std::size_t and_weight(const BitVector& a, const BitVector& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i)
    n += std::popcount(a.words()[i] & b.words()[i]);
  return n;
}

}  // namespace

PauliOp::PauliOp(BitVector x_, BitVector z_, int phase_)
    : x(std::move(x_)), z(std::move(z_)), phase(((phase_ % 4) + 4) % 4) {
  if (x.size() != z.size())
    throw std::invalid_argument("PauliOp x/z length mismatch");
}

PauliOp PauliOp::identity(std::size_t n) {
  return PauliOp(BitVector(n), BitVector(n), 0);
}

PauliOp PauliOp::hermitian(BitVector x_, BitVector z_, bool negative) {
  const int q = static_cast<int>(and_weight(x_, z_)) + (negative ? 2 : 0);
  return PauliOp(std::move(x_), std::move(z_), q);
}

PauliOp PauliOp::from_symplectic(const BitVector& v, bool negative) {
  if (v.size() % 2 != 0)
    throw std::invalid_argument("symplectic vector must have even length");
  const std::size_t n = v.size() / 2;
  return hermitian(v.slice(0, n), v.slice(n, 2 * n), negative);
}

PauliOp PauliOp::from_string(std::string_view s) {
  int q = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-' || s[0] == 'i')) {
    if (s[0] == '+') {
      s.remove_prefix(1);
    } else if (s[0] == 'i') {
      q = 1;
      s.remove_prefix(1);
    } else {  // '-' or "-i"
      s.remove_prefix(1);
      if (!s.empty() && s[0] == 'i') {
        q = 3;
        s.remove_prefix(1);
      } else {
        q = 2;
      }
    }
  }
  BitVector x(s.size()), z(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'I':
        break;
      case 'X':
        x.set(i, true);
        break;
      case 'Y':
        x.set(i, true);
        z.set(i, true);
        q += 1;
        break;
      case 'Z':
        z.set(i, true);
        break;
      default:
        throw std::invalid_argument("invalid Pauli character");
    }
  }
  return PauliOp(std::move(x), std::move(z), q);
}

std::string PauliOp::to_string() const {
  const int canon = static_cast<int>(and_weight(x, z)) % 4;
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string s = prefix[((phase - canon) % 4 + 4) % 4];
  for (std::size_t i = 0; i < num_qubits(); ++i) {
    const bool xi = x.get(i), zi = z.get(i);
    s += xi ? (zi ? 'Y' : 'X') : (zi ? 'Z' : 'I');
  }
  return s;
}

bool PauliOp::is_hermitian() const {
  return (phase & 1) == static_cast<int>(and_weight(x, z) & 1);
}

bool PauliOp::negative() const {
  if (!is_hermitian()) throw std::logic_error("sign of a non-Hermitian Pauli");
  const int canon = static_cast<int>(and_weight(x, z));
  return ((phase - canon) % 4 + 4) % 4 == 2;
}

std::size_t PauliOp::weight() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.words().size(); ++i)
    n += std::popcount(x.words()[i] | z.words()[i]);
  return n;
}

PauliOp& PauliOp::operator*=(const PauliOp& o) {
  if (num_qubits() != o.num_qubits())
    throw std::invalid_argument("PauliOp size mismatch");
  // i^a X^x Z^z · i^b X^u Z^v = i^{a+b} (-1)^{z·u} X^{x+u} Z^{z+v}
  phase = (phase + o.phase + 2 * static_cast<int>(z.dot(o.x))) % 4;
  x ^= o.x;
  z ^= o.z;
  return *this;
}

bool PauliOp::commutes_with(const PauliOp& o) const {
  if (num_qubits() != o.num_qubits())
    throw std::invalid_argument("PauliOp size mismatch");
  return !(x.dot(o.z) ^ z.dot(o.x));
}

bool commutes(const PauliOp& p, const PauliOp& q) { return p.commutes_with(q); }

SymplecticMap::SymplecticMap(BitMatrix m) : mat(std::move(m)) {
  if (!is_symplectic(mat))
    throw std::invalid_argument("matrix is not symplectic");
  n = mat.rows() / 2;
}

SymplecticMap SymplecticMap::identity(std::size_t n) {
  return SymplecticMap(BitMatrix::identity(2 * n));
}

SymplecticMap SymplecticMap::operator*(const SymplecticMap& o) const {
  SymplecticMap r;
  r.n = n;
  r.mat = mat * o.mat;
  return r;
}

SymplecticMap SymplecticMap::inverse() const {
  SymplecticMap r;
  r.n = n;
  r.mat = *gf2_inverse(mat);
  return r;
}

SingleQubitClifford SingleQubitClifford::compose_after(
    const SingleQubitClifford& first) const {
  SingleQubitClifford r;
  r.xx = (xx & first.xx) ^ (xz & first.zx);
  r.xz = (xx & first.xz) ^ (xz & first.zz);
  r.zx = (zx & first.xx) ^ (zz & first.zx);
  r.zz = (zx & first.xz) ^ (zz & first.zz);
  return r;
}

const std::array<SingleQubitClifford, 6>& SingleQubitClifford::all() {
  static const std::array<SingleQubitClifford, 6> table = {{
      {1, 0, 0, 1},  // identity
      {0, 1, 1, 0},  // Hadamard class
      {1, 0, 1, 1},  // S class
      {1, 1, 0, 1},  // sqrt(X) class
      {0, 1, 1, 1},
      {1, 1, 1, 0},
  }};
  return table;
}

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::I: return "I";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::S_DAG: return "S_DAG";
    case GateKind::SQRT_X: return "SQRT_X";
    case GateKind::SQRT_X_DAG: return "SQRT_X_DAG";
    case GateKind::CZ: return "CZ";
    case GateKind::CX: return "CX";
    case GateKind::CY: return "CY";
    case GateKind::R0: return "R0";
    case GateKind::RP: return "RP";
    case GateKind::MX: return "MX";
    case GateKind::MZ: return "MZ";
    case GateKind::TICK: return "TICK";
  }
  throw std::logic_error("unknown gate kind");
}

GateKind gate_kind_from_name(std::string_view name) {
  static const std::map<std::string_view, GateKind> table = {
      {"I", GateKind::I},         {"X", GateKind::X},
      {"Y", GateKind::Y},         {"Z", GateKind::Z},
      {"H", GateKind::H},         {"S", GateKind::S},
      {"S_DAG", GateKind::S_DAG}, {"SQRT_X", GateKind::SQRT_X},
      {"SQRT_X_DAG", GateKind::SQRT_X_DAG},
      {"CZ", GateKind::CZ},       {"CX", GateKind::CX},
      {"CY", GateKind::CY},       {"R0", GateKind::R0},
      {"RP", GateKind::RP},       {"MX", GateKind::MX},
      {"MZ", GateKind::MZ},       {"TICK", GateKind::TICK},
  };
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown gate name: " + std::string(name));
  return it->second;
}

void conjugate_by_gate(PauliOp& p, const Gate& g) {
  if (!g.is_unitary())
    throw std::invalid_argument("cannot conjugate by a non-unitary operation");
  if (g.kind == GateKind::TICK || g.kind == GateKind::I) return;
  const std::size_t a = static_cast<std::size_t>(g.a - 1);
  const bool xa = p.x.get(a), za = p.z.get(a);
  switch (g.kind) {
    case GateKind::X:
      if (za) p.phase = (p.phase + 2) % 4;
      return;
    case GateKind::Y:
      if (xa ^ za) p.phase = (p.phase + 2) % 4;
      return;
    case GateKind::Z:
      if (xa) p.phase = (p.phase + 2) % 4;
      return;
    case GateKind::H:
      if (xa && za) p.phase = (p.phase + 2) % 4;
      p.x.set(a, za);
      p.z.set(a, xa);
      return;
    case GateKind::S:
      if (xa) {
        p.phase = (p.phase + 1) % 4;
        p.z.flip(a);
      }
      return;
    case GateKind::S_DAG:
      if (xa) {
        p.phase = (p.phase + 3) % 4;
        p.z.flip(a);
      }
      return;
    case GateKind::SQRT_X:
      if (za) {
        p.phase = (p.phase + 3) % 4;
        p.x.flip(a);
      }
      return;
    case GateKind::SQRT_X_DAG:
      if (za) {
        p.phase = (p.phase + 1) % 4;
        p.x.flip(a);
      }
      return;
    case GateKind::CZ: {
      const std::size_t b = static_cast<std::size_t>(g.b - 1);
      const bool xb = p.x.get(b);
      if (xa && xb) p.phase = (p.phase + 2) % 4;
      if (xb) p.z.flip(a);
      if (xa) p.z.flip(b);
      return;
    }
    case GateKind::CX: {
      const std::size_t b = static_cast<std::size_t>(g.b - 1);
      if (xa) p.x.flip(b);
      if (p.z.get(b)) p.z.flip(a);
      return;
    }
    case GateKind::CY: {
      // CY = (I ⊗ S) CX (I ⊗ S†) with the control unchanged.
      conjugate_by_gate(p, Gate{GateKind::S_DAG, g.b, 0});
      conjugate_by_gate(p, Gate{GateKind::CX, g.a, g.b});
      conjugate_by_gate(p, Gate{GateKind::S, g.b, 0});
      return;
    }
    default:
      throw std::logic_error("unhandled gate in conjugate_by_gate");
  }
}

CliffordTableau::CliffordTableau(std::size_t n) : n_(n) {
  x_img_.reserve(n);
  z_img_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector x(n), z(n);
    x.set(i, true);
    x_img_.push_back(PauliOp(std::move(x), BitVector(n), 0));
    z.set(i, true);
    z_img_.push_back(PauliOp(BitVector(n), std::move(z), 0));
  }
}

void CliffordTableau::apply_gate(const Gate& g) {
  if (g.kind == GateKind::TICK || g.kind == GateKind::I) return;
  for (auto& p : x_img_) conjugate_by_gate(p, g);
  for (auto& p : z_img_) conjugate_by_gate(p, g);
}

PauliOp CliffordTableau::conjugate(const PauliOp& p) const {
  if (p.num_qubits() != n_)
    throw std::invalid_argument("tableau/Pauli size mismatch");
  PauliOp r = PauliOp::identity(n_);
  r.phase = p.phase;
  for (std::size_t i = 0; i < n_; ++i)
    if (p.x.get(i)) r *= x_img_[i];
  for (std::size_t i = 0; i < n_; ++i)
    if (p.z.get(i)) r *= z_img_[i];
  return r;
}

CliffordTableau CliffordTableau::then(const CliffordTableau& other) const {
  CliffordTableau r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r.x_img_[i] = other.conjugate(x_img_[i]);
    r.z_img_[i] = other.conjugate(z_img_[i]);
  }
  return r;
}

CliffordTableau CliffordTableau::inverse() const {
  const BitMatrix inv = *gf2_inverse(symplectic().mat);
  CliffordTableau r(n_);
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    PauliOp candidate = PauliOp::from_symplectic(inv.column(i));
    const PauliOp forward = conjugate(candidate);
    if (forward.negative()) candidate.phase = (candidate.phase + 2) % 4;
    (i < n_ ? r.x_img_[i] : r.z_img_[i - n_]) = std::move(candidate);
  }
  return r;
}

void CliffordTableau::set_images(std::vector<PauliOp> x_img,
                                 std::vector<PauliOp> z_img) {
  if (x_img.size() != n_ || z_img.size() != n_)
    throw std::invalid_argument("tableau image count mismatch");
  x_img_ = std::move(x_img);
  z_img_ = std::move(z_img);
}

SymplecticMap CliffordTableau::symplectic() const {
  BitMatrix m(2 * n_, 2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    m.set_column(i, x_img_[i].symplectic_vector());
    m.set_column(n_ + i, z_img_[i].symplectic_vector());
  }
  return SymplecticMap(std::move(m));
}

BitVector CliffordTableau::sign_bits() const {
  BitVector s(2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    s.set(i, x_img_[i].negative());
    s.set(n_ + i, z_img_[i].negative());
  }
  return s;
}

OneQubitAction one_qubit_action(GateKind k) {
  PauliOp x = PauliOp::from_string("X");
  PauliOp z = PauliOp::from_string("Z");
  const Gate g{k, 1, 0};
  conjugate_by_gate(x, g);
  conjugate_by_gate(z, g);
  OneQubitAction a;
  a.symplectic.xx = x.x.get(0);
  a.symplectic.zx = x.z.get(0);
  a.symplectic.xz = z.x.get(0);
  a.symplectic.zz = z.z.get(0);
  a.x_negative = x.negative();
  a.z_negative = z.negative();
  return a;
}

namespace {

struct ActionKey {
  std::uint8_t bits;  // xx xz zx zz xneg zneg packed
  bool operator<(const ActionKey& o) const { return bits < o.bits; }
};

ActionKey key_of(const OneQubitAction& a) {
  return ActionKey{static_cast<std::uint8_t>(
      (a.symplectic.xx << 5) | (a.symplectic.xz << 4) | (a.symplectic.zx << 3) |
      (a.symplectic.zz << 2) | (a.x_negative << 1) | (a.z_negative << 0))};
}

OneQubitAction word_action(const std::vector<GateKind>& word) {
  PauliOp x = PauliOp::from_string("X");
  PauliOp z = PauliOp::from_string("Z");
  for (GateKind k : word) {
    conjugate_by_gate(x, Gate{k, 1, 0});
    conjugate_by_gate(z, Gate{k, 1, 0});
  }
  OneQubitAction a;
  a.symplectic.xx = x.x.get(0);
  a.symplectic.zx = x.z.get(0);
  a.symplectic.xz = z.x.get(0);
  a.symplectic.zz = z.z.get(0);
  a.x_negative = x.negative();
  a.z_negative = z.negative();
  return a;
}

// First word (shortest, then enumeration order) for each of the 24
// one-qubit Cliffords; words use at most two of the nine named gates.
const std::map<ActionKey, std::vector<GateKind>>& word_table() {
  static const std::map<ActionKey, std::vector<GateKind>> table = [] {
    std::map<ActionKey, std::vector<GateKind>> t;
    const std::array<GateKind, 9> names = {
        GateKind::I,      GateKind::X,          GateKind::Y,
        GateKind::Z,      GateKind::H,          GateKind::S,
        GateKind::S_DAG,  GateKind::SQRT_X,     GateKind::SQRT_X_DAG};
    t.emplace(key_of(word_action({})), std::vector<GateKind>{});
    for (GateKind a : names) {
      std::vector<GateKind> w{a};
      t.emplace(key_of(word_action(w)), w);
    }
    for (GateKind a : names)
      for (GateKind b : names) {
        std::vector<GateKind> w{a, b};
        t.emplace(key_of(word_action(w)), w);
      }
    if (t.size() != 24)
      throw std::logic_error("one-qubit Clifford word table incomplete");
    return t;
  }();
  return table;
}

}  // namespace

std::vector<GateKind> canonical_word(const OneQubitAction& a) {
  auto it = word_table().find(key_of(a));
  if (it == word_table().end())
    throw std::invalid_argument("not a valid one-qubit Clifford action");
  return it->second;
}

std::vector<GateKind> canonical_word(const SingleQubitClifford& c) {
  return canonical_word(OneQubitAction{c, false, false});
}

}  // namespace lcs
