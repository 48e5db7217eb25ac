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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lcs/bitmat.hpp"

namespace lcs {

/// Phase-tracked n-qubit Pauli operator i^q X^x Z^z with q mod 4.
///
/// A Hermitian Pauli has q congruent to |x AND z| mod 2; the canonical
/// Hermitian representative of a binary vector pair uses q = |x AND z| mod 4
/// (the tensor product of single-qubit I/X/Y/Z factors).
struct PauliOp {
  BitVector x;
  BitVector z;
  int phase = 0;  // exponent of i, mod 4

  PauliOp() = default;
  PauliOp(BitVector x_, BitVector z_, int phase_);

  static PauliOp identity(std::size_t n);
  /// Canonical Hermitian operator for the given binary components.
  static PauliOp hermitian(BitVector x_, BitVector z_, bool negative = false);
  /// From a length-2n symplectic vector [x|z], canonical Hermitian phase.
  static PauliOp from_symplectic(const BitVector& v, bool negative = false);
  /// Parses "XYIZ" with optional leading sign "+", "-", "i", "-i";
  /// qubit 1 is the leftmost character.
  static PauliOp from_string(std::string_view s);

  std::size_t num_qubits() const { return x.size(); }
  std::string to_string() const;

  /// The length-2n vector [x|z].
  BitVector symplectic_vector() const { return x.concat(z); }

  bool is_identity() const { return x.is_zero() && z.is_zero(); }
  bool is_hermitian() const;
  /// For Hermitian operators: false for +P, true for -P, where P is the
  /// canonical Hermitian representative.
  bool negative() const;

  std::size_t weight() const;

  PauliOp& operator*=(const PauliOp& o);
  friend PauliOp operator*(PauliOp a, const PauliOp& b) {
    a *= b;
    return a;
  }

  bool commutes_with(const PauliOp& o) const;

  bool operator==(const PauliOp& o) const {
    return x == o.x && z == o.z && phase == o.phase;
  }
  bool operator!=(const PauliOp& o) const { return !(*this == o); }
};

bool commutes(const PauliOp& p, const PauliOp& q);

/// A 2n x 2n symplectic matrix acting on binary Pauli vectors [x|z]:
/// column i is the image of X_{i+1}, column n+i the image of Z_{i+1}.
struct SymplecticMap {
  std::size_t n = 0;
  BitMatrix mat;

  SymplecticMap() = default;
  /// Throws std::invalid_argument if mat is not symplectic.
  explicit SymplecticMap(BitMatrix m);
  static SymplecticMap identity(std::size_t n);

  SymplecticMap operator*(const SymplecticMap& o) const;
  SymplecticMap inverse() const;
  BitVector apply(const BitVector& v) const { return mat * v; }

  bool operator==(const SymplecticMap& o) const { return mat == o.mat; }
};

/// One of the six single-qubit symplectic classes, as a 2x2 matrix with
/// b_xx * b_zz + b_xz * b_zx = 1. X maps to (xx, zx), Z to (xz, zz).
struct SingleQubitClifford {
  std::uint8_t xx = 1, xz = 0, zx = 0, zz = 1;

  bool valid() const { return ((xx & zz) ^ (xz & zx)) == 1; }
  bool is_identity() const { return xx == 1 && xz == 0 && zx == 0 && zz == 1; }
  SingleQubitClifford compose_after(const SingleQubitClifford& first) const;

  bool operator==(const SingleQubitClifford&) const = default;

  /// All six classes in a fixed order, identity first.
  static const std::array<SingleQubitClifford, 6>& all();
};

enum class GateKind : std::uint8_t {
  I,
  X,
  Y,
  Z,
  H,
  S,
  S_DAG,
  SQRT_X,
  SQRT_X_DAG,
  CZ,
  CX,
  CY,
  R0,
  RP,
  MX,
  MZ,
  TICK,
};

struct Gate {
  GateKind kind = GateKind::I;
  int a = 0;  // 1-indexed qubit; control for CX/CY
  int b = 0;  // second qubit for two-qubit gates, otherwise 0

  bool is_two_qubit() const {
    return kind == GateKind::CZ || kind == GateKind::CX || kind == GateKind::CY;
  }
  bool is_unitary() const {
    return kind != GateKind::R0 && kind != GateKind::RP &&
           kind != GateKind::MX && kind != GateKind::MZ &&
           kind != GateKind::TICK;
  }
  bool operator==(const Gate&) const = default;
};

const char* gate_name(GateKind k);
GateKind gate_kind_from_name(std::string_view name);

/// Conjugates p by the given unitary gate in place: p <- g p g†.
/// Exact phase tracking in the i^q X^x Z^z convention.
void conjugate_by_gate(PauliOp& p, const Gate& g);

/// Clifford tableau: the images of the X_i and Z_i generators under
/// conjugation, with exact signs. The symplectic part drops the signs.
class CliffordTableau {
 public:
  explicit CliffordTableau(std::size_t n);
  static CliffordTableau identity(std::size_t n) { return CliffordTableau(n); }

  std::size_t num_qubits() const { return n_; }

  /// Left-composes a gate: the tableau of g∘U from the tableau of U.
  void apply_gate(const Gate& g);

  /// U p U† with exact phase.
  PauliOp conjugate(const PauliOp& p) const;

  /// Tableau of (other ∘ this), i.e. this is applied first.
  CliffordTableau then(const CliffordTableau& other) const;
  CliffordTableau inverse() const;

  const PauliOp& x_image(std::size_t i) const { return x_img_[i]; }
  const PauliOp& z_image(std::size_t i) const { return z_img_[i]; }
  void set_images(std::vector<PauliOp> x_img, std::vector<PauliOp> z_img);

  SymplecticMap symplectic() const;
  /// 2n sign bits: entry i is the sign of the X_{i+1} image, entry n+i the
  /// sign of the Z_{i+1} image (relative to canonical Hermitian form).
  BitVector sign_bits() const;

  bool operator==(const CliffordTableau& o) const {
    return x_img_ == o.x_img_ && z_img_ == o.z_img_;
  }

 private:
  std::size_t n_;
  std::vector<PauliOp> x_img_;
  std::vector<PauliOp> z_img_;
};

/// The single-qubit tableau of one named gate (images of X and Z).
struct OneQubitAction {
  SingleQubitClifford symplectic;
  bool x_negative = false;
  bool z_negative = false;
  bool operator==(const OneQubitAction&) const = default;
};

OneQubitAction one_qubit_action(GateKind k);

/// Canonical gate word (at most two names) for every one of the 24
/// single-qubit Cliffords; the symplectic-class overload picks the word
/// with positive signs.
std::vector<GateKind> canonical_word(const OneQubitAction& a);
std::vector<GateKind> canonical_word(const SingleQubitClifford& c);

}  // namespace lcs
