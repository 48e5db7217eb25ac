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

#include "lcs/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcs {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string must contain only 0/1");
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (len_ != o.len_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& o) const {
  if (len_ != o.len_) throw std::invalid_argument("BitVector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
  return len_;
}

BitVector BitVector::concat(const BitVector& o) const {
  BitVector r(len_ + o.len_);
  for (std::size_t i = 0; i < len_; ++i) r.set(i, get(i));
  for (std::size_t i = 0; i < o.len_; ++i) r.set(len_ + i, o.get(i));
  return r;
}

BitVector BitVector::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > len_) throw std::out_of_range("BitVector::slice");
  BitVector r(end - begin);
  for (std::size_t i = begin; i < end; ++i) r.set(i - begin, get(i));
  return r;
}

bool BitVector::operator<(const BitVector& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  return words_ < o.words_;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("ragged rows in bit matrix literal");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j] == '1')
        m.set(i, j, true);
      else if (rows[i][j] != '0')
        throw std::invalid_argument("bit matrix literal must contain only 0/1");
    }
  }
  return m;
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = words_.data() + dst * wpr_;
  const std::uint64_t* s = words_.data() + src * wpr_;
  for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(words_.begin() + a * wpr_, words_.begin() + (a + 1) * wpr_,
                   words_.begin() + b * wpr_);
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.set(c, get(r, c));
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row size mismatch");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
  return v;
}

void BitMatrix::set_column(std::size_t c, const BitVector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  BitMatrix m(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw std::out_of_range("select_columns");
    for (std::size_t r = 0; r < rows_; ++r) m.set(r, j, get(r, cols[j]));
  }
  return m;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) m.set(c, r, true);
  return m;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("BitMatrix product dimension mismatch");
  BitMatrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = m.words_.data() + r * m.wpr_;
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = o.words_.data() + k * o.wpr_;
      for (std::size_t i = 0; i < o.wpr_; ++i) dst[i] ^= src[i];
    }
  }
  return m;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
  if (cols_ != v.size())
    throw std::invalid_argument("BitMatrix*BitVector dimension mismatch");
  BitVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const std::uint64_t* rw = words_.data() + i * wpr_;
    const auto& vw = v.words();
    for (std::size_t k = 0; k < wpr_; ++k) acc ^= rw[k] & vw[k];
    r.set(i, std::popcount(acc) & 1);
  }
  return r;
}

bool BitMatrix::operator<(const BitMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return words_ < o.words_;
}

bool BitMatrix::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool BitMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

bool BitMatrix::zero_diagonal() const {
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    if (get(i, i)) return false;
  return true;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

namespace {

// Reduced row echelon form of [a | rhs]; returns pivot column per row.
struct Echelon {
  BitMatrix a;
  BitMatrix rhs;
  std::vector<std::size_t> pivot_cols;  // ascending
  std::vector<std::size_t> pivot_row_of_col;
};

Echelon rref(BitMatrix a, BitMatrix rhs) {
  Echelon e{std::move(a), std::move(rhs), {}, {}};
  e.pivot_row_of_col.assign(e.a.cols(), SIZE_MAX);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < e.a.cols() && next_row < e.a.rows(); ++col) {
    std::size_t pivot = SIZE_MAX;
    for (std::size_t r = next_row; r < e.a.rows(); ++r) {
      if (e.a.get(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == SIZE_MAX) continue;
    e.a.swap_rows(next_row, pivot);
    e.rhs.swap_rows(next_row, pivot);
    for (std::size_t r = 0; r < e.a.rows(); ++r) {
      if (r != next_row && e.a.get(r, col)) {
        e.a.xor_row(r, next_row);
        e.rhs.xor_row(r, next_row);
      }
    }
    e.pivot_cols.push_back(col);
    e.pivot_row_of_col[col] = next_row;
    ++next_row;
  }
  return e;
}

}  // namespace

std::optional<Gf2Solution> gf2_solve(const BitMatrix& a, const BitVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("gf2_solve dimension mismatch");
  BitMatrix rhs(a.rows(), 1);
  rhs.set_column(0, b);
  Echelon e = rref(a, rhs);
  const std::size_t rank = e.pivot_cols.size();
  for (std::size_t r = rank; r < a.rows(); ++r)
    if (e.rhs.get(r, 0)) return std::nullopt;

  Gf2Solution sol;
  sol.particular = BitVector(a.cols());
  for (std::size_t i = 0; i < rank; ++i)
    sol.particular.set(e.pivot_cols[i], e.rhs.get(i, 0));

  for (std::size_t col = 0; col < a.cols(); ++col) {
    if (e.pivot_row_of_col[col] != SIZE_MAX) continue;
    BitVector v(a.cols());
    v.set(col, true);
    for (std::size_t i = 0; i < rank; ++i)
      if (e.a.get(i, col)) v.set(e.pivot_cols[i], true);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::optional<BitMatrix> gf2_solve_matrix(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("gf2_solve_matrix dimension mismatch");
  Echelon e = rref(a, b);
  const std::size_t rank = e.pivot_cols.size();
  for (std::size_t r = rank; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (e.rhs.get(r, c)) return std::nullopt;
  BitMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (e.rhs.get(i, c)) x.set(e.pivot_cols[i], c, true);
  return x;
}

std::optional<BitMatrix> gf2_inverse(const BitMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square");
  return gf2_solve_matrix(a, BitMatrix::identity(a.rows()));
}

std::size_t gf2_rank(const BitMatrix& a) {
  Echelon e = rref(a, BitMatrix(a.rows(), 0));
  return e.pivot_cols.size();
}

BitMatrix symplectic_form(std::size_t n) {
  BitMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, n + i, true);
    m.set(n + i, i, true);
  }
  return m;
}

bool is_symplectic(const BitMatrix& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0) return false;
  const std::size_t n = a.rows() / 2;
  const BitMatrix omega = symplectic_form(n);
  return a.transposed() * omega * a == omega;
}

BitMatrix parse_matrix_text(const std::string& text) {
  std::vector<std::string> rows;
  std::string row;
  auto flush = [&] {
    if (!row.empty()) rows.push_back(std::move(row)), row.clear();
  };
  for (char c : text) {
    if (c == '\n')
      flush();
    else if (c == '0' || c == '1')
      row += c;
    else if (c != ' ' && c != '\t' && c != '\r')
      throw std::invalid_argument("matrix text must contain only 0/1");
  }
  flush();
  return BitMatrix::from_rows(rows);
}

BitMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

void write_matrix_file(const std::string& path, const BitMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file: " + path);
  out << m.to_string();
}

bool symplectic_product(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw std::invalid_argument("symplectic_product wants equal even sizes");
  const std::size_t n = u.size() / 2;
  bool acc = false;
  for (std::size_t i = 0; i < n; ++i) {
    acc ^= u.get(i) && v.get(n + i);
    acc ^= u.get(n + i) && v.get(i);
  }
  return acc;
}

}  // namespace lcs
