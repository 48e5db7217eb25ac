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

#include "lcs/gauge.hpp"

#include <stdexcept>

namespace lcs {

std::optional<bool> FreedomTemplate::fixed_entry(std::size_t r, std::size_t c) const {
  // Block F_xz (top right) is all zero.
  if (r < n && c >= n) return false;
  // Block F_xx: first k columns are [I_k; 0].
  if (r < n && c < k) return r == c;
  // Block F_zz: first k rows are [I_k | 0].
  if (r >= n && c >= n && r - n < k) return r - n == c - n;
  // Block F_zx: zero k x k corner.
  if (r >= n && c < n && r - n < k && c < k) return false;
  return std::nullopt;
}

bool FreedomTemplate::matches(const BitMatrix& f) const {
  if (f.rows() != 2 * n || f.cols() != 2 * n) return false;
  for (std::size_t r = 0; r < 2 * n; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c) {
      const auto fixed = fixed_entry(r, c);
      if (fixed && f.get(r, c) != *fixed) return false;
    }
  return true;
}

std::size_t FreedomTemplate::free_entry_count() const {
  std::size_t count = 0;
  for (std::size_t r = 0; r < 2 * n; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c)
      if (!fixed_entry(r, c)) ++count;
  return count;
}

BigInt freedom_count(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("freedom_count requires k <= n");
  const std::size_t m = n - k;
  const std::size_t exponent = n * (n + 1) / 2 + k * m - k * (k + 1) / 2;
  BigInt count = BigInt(1) << exponent;
  for (std::size_t i = 1; i <= m; ++i)
    count *= (BigInt(1) << m) - (BigInt(1) << (i - 1));
  return count;
}

std::array<BigInt, 3> freedom_count_factored(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("freedom_count_factored requires k <= n");
  const std::size_t m = n - k;
  const BigInt logical = BigInt(1) << (2 * k * m);
  const BigInt errors = BigInt(1) << (m * (m + 1) / 2);
  BigInt regenerations = 1;
  for (std::size_t i = 0; i < m; ++i)
    regenerations *= (BigInt(1) << m) - (BigInt(1) << i);
  return {logical, errors, regenerations};
}

namespace {

BitMatrix matrix_from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if ((bits >> (r * cols + c)) & 1) m.set(r, c, true);
  return m;
}

}  // namespace

void for_each_freedom(std::size_t n, std::size_t k,
                      const std::function<void(const BitMatrix&)>& fn,
                      std::size_t cap) {
  if (k > n) throw std::invalid_argument("for_each_freedom requires k <= n");
  if (freedom_count(n, k) > cap)
    throw std::length_error("freedom group too large for enumeration cap");
  const std::size_t m = n - k;

  if (m == 0) {
    fn(BitMatrix::identity(2 * n));
    return;
  }

  for (std::uint64_t zbits = 0; zbits < (std::uint64_t(1) << (m * m)); ++zbits) {
    const BitMatrix corner = matrix_from_bits(m, m, zbits);
    const auto corner_inv = gf2_inverse(corner);
    if (!corner_inv) continue;
    for (std::uint64_t ybits = 0; ybits < (std::uint64_t(1) << (k * m)); ++ybits) {
      // F_zz = [[I_k, 0], [Y, Z]] with Z invertible.
      BitMatrix f_zz = BitMatrix::identity(n);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < k; ++c)
          f_zz.set(k + r, c, (ybits >> (r * k + c)) & 1);
        for (std::size_t c = 0; c < m; ++c)
          f_zz.set(k + r, k + c, corner.get(r, c));
      }
      const BitMatrix f_xx = *gf2_inverse(f_zz.transposed());
      // Symmetric product M with zero k x k corner: F_zx = F_zz * M.
      const std::size_t m12_bits = k * m;
      const std::size_t m22_bits = m * (m + 1) / 2;
      for (std::uint64_t mbits = 0; mbits < (std::uint64_t(1) << (m12_bits + m22_bits));
           ++mbits) {
        BitMatrix sym(n, n);
        std::size_t bit = 0;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < m; ++c, ++bit)
            if ((mbits >> bit) & 1) {
              sym.set(r, k + c, true);
              sym.set(k + c, r, true);
            }
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = r; c < m; ++c, ++bit)
            if ((mbits >> bit) & 1) {
              sym.set(k + r, k + c, true);
              sym.set(k + c, k + r, true);
            }
        const BitMatrix f_zx = f_zz * sym;
        BitMatrix f(2 * n, 2 * n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            if (f_xx.get(r, c)) f.set(r, c, true);
            if (f_zx.get(r, c)) f.set(n + r, c, true);
            if (f_zz.get(r, c)) f.set(n + r, n + c, true);
          }
        fn(f);
      }
    }
  }
}

std::vector<BitMatrix> enumerate_freedom(std::size_t n, std::size_t k, std::size_t cap) {
  std::vector<BitMatrix> out;
  for_each_freedom(n, k, [&out](const BitMatrix& f) { out.push_back(f); }, cap);
  return out;
}

bool is_valid_freedom(const BitMatrix& f, std::size_t n, std::size_t k) {
  return FreedomTemplate{n, k}.matches(f) && is_symplectic(f);
}

std::optional<bool> ReducedFreedomTemplate::fixed_entry(std::size_t r,
                                                        std::size_t c) const {
  if (r < 2 * k && c < 2 * k) return target.get(r, c);
  if (r < 2 * k) return false;  // zero block right of the target
  return std::nullopt;          // bottom n-k rows are free
}

bool ReducedFreedomTemplate::matches(const BitMatrix& f_prime) const {
  if (f_prime.rows() != n + k || f_prime.cols() != n + k) return false;
  for (std::size_t r = 0; r < 2 * k; ++r)
    for (std::size_t c = 0; c < n + k; ++c)
      if (f_prime.get(r, c) != *fixed_entry(r, c)) return false;
  return true;
}

ReducedFreedomTemplate reduced_freedom_template(const BitMatrix& target,
                                                std::size_t n) {
  if (target.rows() != target.cols() || target.rows() % 2 != 0 ||
      !is_symplectic(target))
    throw std::invalid_argument("target must be a symplectic 2k x 2k matrix");
  const std::size_t k = target.rows() / 2;
  if (k > n) throw std::invalid_argument("target has more logical qubits than n");
  return ReducedFreedomTemplate{n, k, target};
}

BitMatrix trim_to_reduced(const BitMatrix& full, std::size_t n, std::size_t k) {
  if (full.rows() != 2 * n || full.cols() != 2 * n)
    throw std::invalid_argument("trim_to_reduced expects a 2n x 2n matrix");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i) keep.push_back(i);
  for (std::size_t i = n; i < 2 * n; ++i) keep.push_back(i);
  BitMatrix rows_kept(n + k, 2 * n);
  for (std::size_t r = 0; r < keep.size(); ++r)
    rows_kept.set_row(r, full.row(keep[r]));
  return rows_kept.select_columns(keep);
}

}  // namespace lcs
