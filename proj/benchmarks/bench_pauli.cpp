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

#include "lcs/circuit.hpp"

namespace {

lcs::GateSequence random_sequence(std::mt19937& rng, std::size_t n, std::size_t len) {
  static const lcs::GateKind one_q[] = {lcs::GateKind::H, lcs::GateKind::S,
                                        lcs::GateKind::SQRT_X};
  lcs::GateSequence seq;
  seq.n = n;
  for (std::size_t i = 0; i < len; ++i) {
    if (rng() % 3 == 0) {
      int a = 1 + static_cast<int>(rng() % n), b = a;
      while (b == a) b = 1 + static_cast<int>(rng() % n);
      seq.gates.push_back(lcs::Gate{lcs::GateKind::CZ, a, b});
    } else {
      seq.gates.push_back(
          lcs::Gate{one_q[rng() % 3], 1 + static_cast<int>(rng() % n), 0});
    }
  }
  return seq;
}

void BM_TableauBuild(benchmark::State& state) {
  std::mt19937 rng(4);
  const auto seq = random_sequence(rng, static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(lcs::tableau_of(seq));
}
BENCHMARK(BM_TableauBuild)->Arg(8)->Arg(32);

void BM_TableauConjugate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(5);
  const auto t = lcs::tableau_of(random_sequence(rng, n, 200));
  lcs::BitVector x(n), z(n);
  for (std::size_t i = 0; i < n; ++i) {
    x.set(i, rng() & 1);
    z.set(i, rng() & 1);
  }
  const auto p = lcs::PauliOp::hermitian(x, z);
  for (auto _ : state) benchmark::DoNotOptimize(t.conjugate(p));
}
BENCHMARK(BM_TableauConjugate)->Arg(8)->Arg(32);

}  // namespace
