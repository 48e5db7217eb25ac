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
#include <cstddef>
#include <functional>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcs/bitmat.hpp"

namespace lcs {

using BigInt = boost::multiprecision::cpp_int;

/// Per-entry classification of the freedom-matrix shape: identity blocks,
/// zero blocks, and a zero k x k corner in the lower-left quadrant; the
/// remaining entries are free (subject only to symplecticity).
struct FreedomTemplate {
  std::size_t n = 0;
  std::size_t k = 0;

  /// Fixed value at (r, c), or nullopt when the entry is free.
  std::optional<bool> fixed_entry(std::size_t r, std::size_t c) const;
  bool matches(const BitMatrix& f) const;
  std::size_t free_entry_count() const;
};

/// Exact size of the freedom gauge group for an [[n,k]] code.
BigInt freedom_count(std::size_t n, std::size_t k);

/// Three-factor decomposition of freedom_count: transformations of logical
/// Paulis modulo stabilizers, the extra freedom on error operators, and the
/// regenerations of the stabilizer generator set. The factors multiply to
/// freedom_count(n, k).
std::array<BigInt, 3> freedom_count_factored(std::size_t n, std::size_t k);

inline constexpr std::size_t kDefaultFreedomEnumerationCap = std::size_t(1) << 20;

/// Streams every element of the freedom gauge group exactly once, in a
/// deterministic order, constructed from the block parameterization
/// (F_zz with invertible lower corner, F_xx its inverse transpose, F_zx
/// from an admissible symmetric product). Throws std::length_error when
/// freedom_count(n, k) exceeds cap.
void for_each_freedom(std::size_t n, std::size_t k,
                      const std::function<void(const BitMatrix&)>& fn,
                      std::size_t cap = kDefaultFreedomEnumerationCap);

std::vector<BitMatrix> enumerate_freedom(std::size_t n, std::size_t k,
                                         std::size_t cap = kDefaultFreedomEnumerationCap);

/// Symplectic and template-conformant.
bool is_valid_freedom(const BitMatrix& f, std::size_t n, std::size_t k);

/// Shape of the reduced freedom matrix: the 2k x 2k target in the top-left,
/// zeros to its right, and (n+k)(n-k) free entries in the bottom rows.
struct ReducedFreedomTemplate {
  std::size_t n = 0;
  std::size_t k = 0;
  BitMatrix target;  // 2k x 2k

  std::optional<bool> fixed_entry(std::size_t r, std::size_t c) const;
  bool matches(const BitMatrix& f_prime) const;
  std::size_t free_entry_count() const { return (n + k) * (n - k); }
};

/// Throws std::invalid_argument unless target is symplectic on k qubits.
ReducedFreedomTemplate reduced_freedom_template(const BitMatrix& target, std::size_t n);

/// An assignment of the reduced freedom matrix (the compiler's gauge output).
struct ReducedFreedom {
  std::size_t n = 0;
  std::size_t k = 0;
  BitMatrix f_prime;  // (n+k) x (n+k)
};

/// Removes rows and columns k+1..n from a full 2n x 2n matrix (applied to
/// the product C'F this yields the reduced freedom matrix).
BitMatrix trim_to_reduced(const BitMatrix& full, std::size_t n, std::size_t k);

}  // namespace lcs
