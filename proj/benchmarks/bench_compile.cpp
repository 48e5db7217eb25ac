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

#include "lcs/compile.hpp"
#include "lcs/ft.hpp"

namespace {

void BM_EncodeIceberg(benchmark::State& state) {
  const auto code = lcs::builtin_code("iceberg-4-2-2");
  const auto enc = lcs::reduce_encoding(lcs::build_encoding(code));
  const auto target = lcs::LogicalGate::from_spec("CX@1,2", 2).symplectic();
  const auto con = lcs::conn_ring(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lcs::encode(enc, target, static_cast<std::size_t>(state.range(0)), con));
}
BENCHMARK(BM_EncodeIceberg)->Arg(1)->Arg(3);

void BM_CompileIcebergGate(benchmark::State& state) {
  const auto code = lcs::builtin_code("iceberg-4-2-2");
  const auto target = lcs::LogicalGate::from_spec("H@1;CX@2,1", 2);
  const auto con = lcs::conn_ring(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(lcs::compile(code, target, 3, con, lcs::Budget{600.0}));
}
BENCHMARK(BM_CompileIcebergGate)->Unit(benchmark::kMillisecond);

void BM_CompileColorCodeS(benchmark::State& state) {
  const auto code = lcs::builtin_code("color-8-3-2");
  const auto target = lcs::LogicalGate::from_spec("S@1", 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lcs::compile(code, target, 1, lcs::conn_cube8(), lcs::Budget{600.0}));
}
BENCHMARK(BM_CompileColorCodeS)->Unit(benchmark::kMillisecond);

void BM_FaultEnumeration(benchmark::State& state) {
  const auto code = lcs::builtin_code("color-8-3-2");
  const auto out = lcs::compile(code, lcs::LogicalGate::from_spec("S@1", 3), 1,
                                lcs::conn_cube8(), lcs::Budget{600.0});
  const auto circuit = lcs::flatten(out.result->circuit);
  const auto guarded = lcs::find_guards(circuit, code);
  for (auto _ : state)
    benchmark::DoNotOptimize(lcs::check_fault_tolerance(guarded.gadget, code));
}
BENCHMARK(BM_FaultEnumeration)->Unit(benchmark::kMillisecond);

void BM_BaselineSynthesis(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  lcs::GateSequence seq;
  seq.n = n;
  for (std::size_t q = 1; q < n; ++q) {
    seq.gates.push_back(lcs::Gate{lcs::GateKind::H, static_cast<int>(q), 0});
    seq.gates.push_back(
        lcs::Gate{lcs::GateKind::CZ, static_cast<int>(q), static_cast<int>(q + 1)});
  }
  const auto u = lcs::tableau_of(seq).symplectic();
  const auto con = lcs::conn_line(n);
  for (auto _ : state) benchmark::DoNotOptimize(lcs::baseline_compile(u, con));
}
BENCHMARK(BM_BaselineSynthesis)->Arg(6)->Arg(12);

}  // namespace
