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

#include <benchmark/benchmark.h>

#include <random>

#include "lcs/bitmat.hpp"

namespace {

lcs::BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  lcs::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
  return m;
}

void BM_MatrixProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  const lcs::BitMatrix a = random_matrix(rng, n, n);
  const lcs::BitMatrix b = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatrixProduct)->Arg(16)->Arg(64)->Arg(256);

void BM_Solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(2);
  const lcs::BitMatrix a = random_matrix(rng, n, n);
  lcs::BitVector b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(lcs::gf2_solve(a, b));
}
BENCHMARK(BM_Solve)->Arg(16)->Arg(64)->Arg(128);

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(3);
  const lcs::BitMatrix a = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(lcs::gf2_rank(a));
}
BENCHMARK(BM_Rank)->Arg(24)->Arg(128);

void BM_IsSymplectic(benchmark::State& state) {
  const lcs::BitMatrix omega = lcs::symplectic_form(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lcs::is_symplectic(omega));
}
BENCHMARK(BM_IsSymplectic)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
