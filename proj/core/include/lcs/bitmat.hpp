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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcs {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  /// Parity of the AND of two vectors (the GF(2) inner product).
  bool dot(const BitVector& o) const;

  std::size_t popcount() const;
  bool is_zero() const;
  /// Index of the first set bit, or size() if none.
  std::size_t first_set() const;

  /// Concatenation [*this | o].
  BitVector concat(const BitVector& o) const;
  /// Slice [begin, end).
  BitVector slice(std::size_t begin, std::size_t end) const;

  bool operator==(const BitVector& o) const {
    return len_ == o.len_ && words_ == o.words_;
  }
  bool operator!=(const BitVector& o) const { return !(*this == o); }
  bool operator<(const BitVector& o) const;  // lexicographic on (len, words)

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense row-major bit-packed matrix over GF(2). Bits beyond the column
/// count inside the last word of each row are kept at zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n);
  /// Parses rows of '0'/'1' strings.
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t mask = std::uint64_t(1) << (c & 63);
    if (v)
      words_[r * wpr_ + (c >> 6)] |= mask;
    else
      words_[r * wpr_ + (c >> 6)] &= ~mask;
  }
  void flip(std::size_t r, std::size_t c) {
    words_[r * wpr_ + (c >> 6)] ^= std::uint64_t(1) << (c & 63);
  }

  /// dst ^= src, row-wise.
  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  BitVector column(std::size_t c) const;
  void set_column(std::size_t c, const BitVector& v);

  /// New matrix keeping the given columns, in the given order.
  BitMatrix select_columns(const std::vector<std::size_t>& cols) const;

  BitMatrix transposed() const;

  /// Matrix product over GF(2). Throws std::invalid_argument on a
  /// dimension mismatch.
  BitMatrix operator*(const BitMatrix& o) const;
  BitVector operator*(const BitVector& v) const;

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
  }
  bool operator!=(const BitMatrix& o) const { return !(*this == o); }
  bool operator<(const BitMatrix& o) const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool zero_diagonal() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Gf2Solution {
  BitVector particular;
  std::vector<BitVector> nullspace;
};

/// Solves a·x = b. Returns the lexicographically-least particular solution
/// (free variables zero) together with a canonical nullspace basis, or
/// nullopt for an inconsistent system. Pivoting is deterministic: columns
/// are scanned left to right, the first usable row wins.
std::optional<Gf2Solution> gf2_solve(const BitMatrix& a, const BitVector& b);

/// Solves a·X = b column by column; nullopt if any column is inconsistent.
std::optional<BitMatrix> gf2_solve_matrix(const BitMatrix& a, const BitMatrix& b);

std::optional<BitMatrix> gf2_inverse(const BitMatrix& a);

std::size_t gf2_rank(const BitMatrix& a);

/// The 2n x 2n form [[0, I], [I, 0]].
BitMatrix symplectic_form(std::size_t n);

/// True iff a is 2n x 2n and aᵀ·Ω·a = Ω.
bool is_symplectic(const BitMatrix& a);

/// GF(2) inner product in the symplectic pairing: u_x·v_z + u_z·v_x.
bool symplectic_product(const BitVector& u, const BitVector& v);

/// Text form: one row of '0'/'1' characters per line (spaces tolerated on
/// input). The same format serves gauge-matrix output and target files.
BitMatrix parse_matrix_text(const std::string& text);
BitMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const BitMatrix& m);

}  // namespace lcs
