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

#include "lcs/code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lcs {

BitMatrix StabilizerCode::stabilizer_matrix() const {
  BitMatrix m(2 * n, stabilizers.size());
  for (std::size_t j = 0; j < stabilizers.size(); ++j)
    m.set_column(j, stabilizers[j].symplectic_vector());
  return m;
}

CodeDiagnostics validate(const StabilizerCode& code) {
  CodeDiagnostics d;
  auto fail = [&d](std::string msg) {
    d.ok = false;
    d.problems.push_back(std::move(msg));
  };

  if (code.k > code.n) {
    fail("k exceeds n");
    return d;
  }
  if (code.stabilizers.size() != code.n - code.k)
    fail("expected " + std::to_string(code.n - code.k) +
         " stabilizer generators, got " + std::to_string(code.stabilizers.size()));
  if (code.logical_x.size() != code.k || code.logical_z.size() != code.k)
    fail("expected " + std::to_string(code.k) + " logical X and Z operators");
  for (const auto& p : code.stabilizers)
    if (p.num_qubits() != code.n) fail("stabilizer qubit count mismatch");
  for (const auto& p : code.logical_x)
    if (p.num_qubits() != code.n) fail("logical X qubit count mismatch");
  for (const auto& p : code.logical_z)
    if (p.num_qubits() != code.n) fail("logical Z qubit count mismatch");
  if (!d.ok) return d;

  for (std::size_t i = 0; i < code.stabilizers.size(); ++i)
    if (!code.stabilizers[i].is_hermitian()) {
      fail("stabilizer S" + std::to_string(i + 1) + " is not Hermitian");
      return d;
    }
  for (std::size_t i = 0; i < code.k; ++i) {
    if (!code.logical_x[i].is_hermitian()) {
      fail("logical X" + std::to_string(i + 1) + " is not Hermitian");
      return d;
    }
    if (!code.logical_z[i].is_hermitian()) {
      fail("logical Z" + std::to_string(i + 1) + " is not Hermitian");
      return d;
    }
  }

  for (std::size_t i = 0; i < code.stabilizers.size() && d.ok; ++i)
    for (std::size_t j = i + 1; j < code.stabilizers.size(); ++j)
      if (!commutes(code.stabilizers[i], code.stabilizers[j])) {
        fail("stabilizers S" + std::to_string(i + 1) + " and S" +
             std::to_string(j + 1) + " anticommute");
        break;
      }
  if (!d.ok) return d;

  if (gf2_rank(code.stabilizer_matrix().transposed()) != code.n - code.k) {
    fail("stabilizer generators are not independent");
    return d;
  }

  for (std::size_t i = 0; i < code.k && d.ok; ++i) {
    for (std::size_t j = 0; j < code.stabilizers.size(); ++j) {
      if (!commutes(code.logical_x[i], code.stabilizers[j])) {
        fail("logical X" + std::to_string(i + 1) + " anticommutes with S" +
             std::to_string(j + 1));
        break;
      }
      if (!commutes(code.logical_z[i], code.stabilizers[j])) {
        fail("logical Z" + std::to_string(i + 1) + " anticommutes with S" +
             std::to_string(j + 1));
        break;
      }
    }
  }
  if (!d.ok) return d;

  for (std::size_t i = 0; i < code.k && d.ok; ++i)
    for (std::size_t j = 0; j < code.k; ++j) {
      const bool want_anticommute = (i == j);
      if (commutes(code.logical_x[i], code.logical_z[j]) == want_anticommute) {
        fail("logical pair X" + std::to_string(i + 1) + "/Z" +
             std::to_string(j + 1) +
             (want_anticommute ? " must anticommute" : " must commute"));
        break;
      }
      if (j > i && !commutes(code.logical_x[i], code.logical_x[j])) {
        fail("logical X" + std::to_string(i + 1) + " and X" +
             std::to_string(j + 1) + " anticommute");
        break;
      }
      if (j > i && !commutes(code.logical_z[i], code.logical_z[j])) {
        fail("logical Z" + std::to_string(i + 1) + " and Z" +
             std::to_string(j + 1) + " anticommute");
        break;
      }
    }
  return d;
}

EncodingMatrix build_encoding(const StabilizerCode& code) {
  const CodeDiagnostics d = validate(code);
  if (!d.ok)
    throw std::invalid_argument("invalid code: " +
                                (d.problems.empty() ? "?" : d.problems.front()));
  const std::size_t n = code.n, k = code.k;
  BitMatrix e(2 * n, 2 * n);
  for (std::size_t i = 0; i < k; ++i) {
    e.set_column(i, code.logical_x[i].symplectic_vector());
    e.set_column(n + i, code.logical_z[i].symplectic_vector());
  }
  for (std::size_t j = 0; j < n - k; ++j)
    e.set_column(n + k + j, code.stabilizers[j].symplectic_vector());

  // Destabilizer column k+j pairs with stabilizer column n+k+j and must be
  // symplectically orthogonal to everything else chosen so far.
  const BitMatrix omega = symplectic_form(n);
  std::vector<BitVector> known;       // vectors the solution must pair with
  std::vector<bool> pair_one;         // required pairing value per vector
  auto add_constraint = [&](const BitVector& v) {
    known.push_back(v);
    pair_one.push_back(false);
  };
  for (std::size_t i = 0; i < k; ++i) add_constraint(e.column(i));
  for (std::size_t i = 0; i < k; ++i) add_constraint(e.column(n + i));
  const std::size_t stab_base = known.size();
  for (std::size_t j = 0; j < n - k; ++j) add_constraint(e.column(n + k + j));

  for (std::size_t j = 0; j < n - k; ++j) {
    BitMatrix sys(known.size(), 2 * n);
    BitVector rhs(known.size());
    for (std::size_t r = 0; r < known.size(); ++r) {
      sys.set_row(r, omega * known[r]);
      rhs.set(r, r == stab_base + j);
    }
    auto sol = gf2_solve(sys, rhs);
    if (!sol)
      throw std::logic_error("symplectic completion failed on a valid code");
    e.set_column(k + j, sol->particular);
    add_constraint(sol->particular);
  }

  if (!is_symplectic(e))
    throw std::logic_error("encoding completion produced a non-symplectic matrix");
  return EncodingMatrix{n, k, std::move(e)};
}

ReducedEncoding reduce_encoding(const EncodingMatrix& e) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < e.k; ++i) keep.push_back(i);
  for (std::size_t i = e.n; i < 2 * e.n; ++i) keep.push_back(i);
  return ReducedEncoding{e.n, e.k, e.e.select_columns(keep)};
}

namespace {

StabilizerCode make_code(std::string name, std::size_t n, std::size_t k,
                         const std::vector<std::string>& stabs,
                         const std::vector<std::string>& lx,
                         const std::vector<std::string>& lz) {
  StabilizerCode c;
  c.name = std::move(name);
  c.n = n;
  c.k = k;
  for (const auto& s : stabs) c.stabilizers.push_back(PauliOp::from_string(s));
  for (const auto& s : lx) c.logical_x.push_back(PauliOp::from_string(s));
  for (const auto& s : lz) c.logical_z.push_back(PauliOp::from_string(s));
  return c;
}

}  // namespace

std::vector<std::string> builtin_code_names() {
  return {"iceberg-4-2-2", "twisted-toric-12-2-3", "color-8-3-2"};
}

StabilizerCode builtin_code(const std::string& name) {
  if (name == "iceberg-4-2-2") {
    return make_code(name, 4, 2, {"XXXX", "ZZZZ"}, {"XXII", "XIXI"},
                     {"IZIZ", "IIZZ"});
  }
  if (name == "twisted-toric-12-2-3") {
    return make_code(name, 12, 2,
                     {
                         "XXIIIXXIIIII",  // X1 X2 X6 X7
                         "XIIXIIIIIIXX",  // X1 X4 X11 X12
                         "IXXIIIIIXXII",  // X2 X3 X9 X10
                         "IIXXXIIXIIII",  // X3 X4 X5 X8
                         "IIIIXXIIIXXI",  // X5 X6 X10 X11
                         "ZZIIIIIIZIIZ",  // Z1 Z2 Z9 Z12
                         "ZIIZZZIIIIII",  // Z1 Z4 Z5 Z6
                         "IZZIIIZZIIII",  // Z2 Z3 Z7 Z8
                         "IIZZIIIIIZZI",  // Z3 Z4 Z10 Z11
                         "IIIIZIIZZZII",  // Z5 Z8 Z9 Z10
                     },
                     {"XIIIXIIIXIII", "XXXXIIIIIIII"},
                     {"ZZZZIIIIIIII", "IZIIIZIIIZII"});
  }
  if (name == "color-8-3-2") {
    // Cube vertices: qubit v sits at coordinates ((v-1)&1, (v-1)>>1&1,
    // (v-1)>>2&1). Logical X operators are the three faces through vertex 8,
    // logical Z operators the three edges through vertex 1.
    return make_code(name, 8, 3,
                     {
                         "XXXXXXXX",
                         "ZZZZIIII",  // z = 0 face
                         "ZZIIZZII",  // y = 0 face
                         "ZIZIZIZI",  // x = 0 face
                         "IIIIZZZZ",  // z = 1 face
                     },
                     {"IXIXIXIX", "IIXXIIXX", "IIIIXXXX"},
                     {"ZZIIIIII", "ZIZIIIII", "ZIIIZIII"});
  }
  throw std::invalid_argument("unknown builtin code: " + name);
}

StabilizerCode parse_code_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  StabilizerCode c;
  c.name = j.value("name", "");
  c.n = j.at("n").get<std::size_t>();
  c.k = j.at("k").get<std::size_t>();
  for (const auto& s : j.at("stabilizers"))
    c.stabilizers.push_back(PauliOp::from_string(s.get<std::string>()));
  for (const auto& s : j.at("logical_x"))
    c.logical_x.push_back(PauliOp::from_string(s.get<std::string>()));
  for (const auto& s : j.at("logical_z"))
    c.logical_z.push_back(PauliOp::from_string(s.get<std::string>()));
  return c;
}

std::string code_to_json(const StabilizerCode& code) {
  nlohmann::json j;
  if (!code.name.empty()) j["name"] = code.name;
  j["n"] = code.n;
  j["k"] = code.k;
  j["stabilizers"] = nlohmann::json::array();
  for (const auto& p : code.stabilizers) j["stabilizers"].push_back(p.to_string());
  j["logical_x"] = nlohmann::json::array();
  for (const auto& p : code.logical_x) j["logical_x"].push_back(p.to_string());
  j["logical_z"] = nlohmann::json::array();
  for (const auto& p : code.logical_z) j["logical_z"].push_back(p.to_string());
  return j.dump(2) + "\n";
}

StabilizerCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_code_json(buf.str());
}

void write_code_file(const std::string& path, const StabilizerCode& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write code file: " + path);
  out << code_to_json(code);
}

}  // namespace lcs
