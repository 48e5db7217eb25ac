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

#include <algorithm>
#include <stdexcept>

#include "lcs/compile.hpp"

namespace lcs {

namespace {

// Literal-or-constant node used during Tseitin construction.
using Node = std::int32_t;
constexpr Node kFalse = -1;
constexpr Node kTrue = -2;

Node node_of(sat::Lit l) { return l.x; }
bool is_const(Node n) { return n < 0; }
sat::Lit lit_of(Node n) { return sat::Lit{n}; }
Node node_not(Node n) {
  if (n == kFalse) return kTrue;
  if (n == kTrue) return kFalse;
  return n ^ 1;
}

class InstanceBuilder {
 public:
  explicit InstanceBuilder(SatInstance& inst) : inst_(inst) {}

  sat::Var fresh() { return inst_.cnf.num_vars++; }

  void clause(std::vector<sat::Lit> lits) { inst_.cnf.clauses.push_back(std::move(lits)); }

  Node mk_and(Node a, Node b) {
    if (a == kFalse || b == kFalse) return kFalse;
    if (a == kTrue) return b;
    if (b == kTrue) return a;
    if (a == b) return a;
    if (a == node_not(b)) return kFalse;
    const sat::Lit t = sat::mk_lit(fresh());
    clause({~t, lit_of(a)});
    clause({~t, lit_of(b)});
    clause({t, ~lit_of(a), ~lit_of(b)});
    ++inst_.aux_vars;
    return node_of(t);
  }

  // XOR of the nodes; constants fold, equal literals cancel pairwise.
  Node mk_xor(std::vector<Node> nodes) {
    bool parity = false;
    std::vector<Node> lits;
    for (Node n : nodes) {
      if (n == kTrue)
        parity = !parity;
      else if (n != kFalse)
        lits.push_back(n);
    }
    std::sort(lits.begin(), lits.end());
    std::vector<Node> reduced;
    for (std::size_t i = 0; i < lits.size();) {
      if (i + 1 < lits.size() && lits[i] == lits[i + 1]) {
        i += 2;  // x ^ x = 0
      } else if (i + 1 < lits.size() && lits[i + 1] == node_not(lits[i])) {
        parity = !parity;  // x ^ ~x = 1
        i += 2;
      } else {
        reduced.push_back(lits[i]);
        ++i;
      }
    }
    if (reduced.empty()) return parity ? kTrue : kFalse;
    Node acc = reduced[0];
    for (std::size_t i = 1; i < reduced.size(); ++i) acc = mk_xor2(acc, reduced[i]);
    return parity ? node_not(acc) : acc;
  }

  // Asserts XOR(nodes) == value.
  void require_parity(std::vector<Node> nodes, bool value) {
    const Node x = mk_xor(std::move(nodes));
    if (is_const(x)) {
      if ((x == kTrue) != value) clause({});  // unsatisfiable instance
      return;
    }
    clause({value ? lit_of(x) : ~lit_of(x)});
  }

 private:
  Node mk_xor2(Node a, Node b) {
    const sat::Lit t = sat::mk_lit(fresh());
    const sat::Lit la = lit_of(a), lb = lit_of(b);
    clause({~la, ~lb, ~t});
    clause({la, lb, ~t});
    clause({la, ~lb, t});
    clause({~la, lb, t});
    ++inst_.aux_vars;
    return node_of(t);
  }

  SatInstance& inst_;
};

// Forbid the ten 4-bit assignments with xx*zz + xz*zx = 0.
void add_determinant_clauses(InstanceBuilder& b, const SclVarSet& v) {
  const sat::Var vars[4] = {v.xx, v.xz, v.zx, v.zz};
  for (unsigned bits = 0; bits < 16; ++bits) {
    const bool xx = bits & 1, xz = bits & 2, zx = bits & 4, zz = bits & 8;
    if ((xx && zz) != (xz && zx)) continue;  // determinant 1, allowed
    std::vector<sat::Lit> clause;
    const bool vals[4] = {xx, xz, zx, zz};
    for (int i = 0; i < 4; ++i) clause.push_back(sat::mk_lit(vars[i], vals[i]));
    b.clause(std::move(clause));
  }
}

}  // namespace

SatInstance encode(const ReducedEncoding& enc, const BitMatrix& target_c,
                   std::size_t l, const ConnectivityGraph& con) {
  const std::size_t n = enc.n, k = enc.k;
  if (con.n != n)
    throw std::invalid_argument("connectivity size differs from the code size");
  if (target_c.rows() != 2 * k || target_c.cols() != 2 * k)
    throw std::invalid_argument("target must be 2k x 2k");
  if (!is_symplectic(target_c) && k > 0)
    throw std::invalid_argument("target must be symplectic");

  SatInstance inst;
  inst.n = n;
  inst.k = k;
  inst.l = l;
  inst.target = target_c;
  inst.encoding = enc;
  InstanceBuilder b(inst);

  // Structure variables first so the branching order prefers them.
  inst.scl_vars.resize(l + 1);
  for (std::size_t layer = 0; layer <= l; ++layer) {
    inst.scl_vars[layer].reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
      SclVarSet v{b.fresh(), b.fresh(), b.fresh(), b.fresh()};
      inst.scl_vars[layer].push_back(v);
      add_determinant_clauses(b, v);
    }
  }
  inst.czl_edges.resize(l);
  inst.czl_vars.resize(l);
  for (std::size_t layer = 0; layer < l; ++layer) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (con.adj.get(u, v)) {
          inst.czl_edges[layer].emplace_back(u, v);
          const sat::Var var = b.fresh();
          inst.czl_vars[layer].push_back(var);
          inst.cost_lits.push_back(sat::mk_lit(var));
        }
  }
  inst.fprime_vars.assign(n - k, std::vector<sat::Var>(n + k));
  for (std::size_t r = 0; r < n - k; ++r)
    for (std::size_t c = 0; c < n + k; ++c) inst.fprime_vars[r][c] = b.fresh();

  // Matrix chain: M_0 = E', then alternately apply SCL and CZL layers.
  const std::size_t cols = n + k;
  std::vector<std::vector<Node>> m(2 * n, std::vector<Node>(cols));
  for (std::size_t r = 0; r < 2 * n; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m[r][c] = enc.e_prime.get(r, c) ? kTrue : kFalse;

  auto apply_scl = [&](std::size_t layer) {
    for (std::size_t q = 0; q < n; ++q) {
      const SclVarSet& v = inst.scl_vars[layer][q];
      const Node xx = node_of(sat::mk_lit(v.xx)), xz = node_of(sat::mk_lit(v.xz));
      const Node zx = node_of(sat::mk_lit(v.zx)), zz = node_of(sat::mk_lit(v.zz));
      for (std::size_t c = 0; c < cols; ++c) {
        const Node x_old = m[q][c], z_old = m[n + q][c];
        m[q][c] = b.mk_xor({b.mk_and(xx, x_old), b.mk_and(xz, z_old)});
        m[n + q][c] = b.mk_xor({b.mk_and(zx, x_old), b.mk_and(zz, z_old)});
      }
    }
  };
  auto apply_czl = [&](std::size_t layer) {
    std::vector<std::vector<std::size_t>> neighbors(n);
    for (std::size_t e = 0; e < inst.czl_edges[layer].size(); ++e) {
      const auto [u, v] = inst.czl_edges[layer][e];
      neighbors[u].push_back(e);
      neighbors[v].push_back(e);
    }
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::vector<Node> sum{m[n + q][c]};
        for (std::size_t e : neighbors[q]) {
          const auto [u, v] = inst.czl_edges[layer][e];
          const std::size_t other = (u == q) ? v : u;
          sum.push_back(
              b.mk_and(node_of(sat::mk_lit(inst.czl_vars[layer][e])), m[other][c]));
        }
        m[n + q][c] = b.mk_xor(std::move(sum));
      }
    }
  };

  apply_scl(0);
  for (std::size_t layer = 0; layer < l; ++layer) {
    apply_czl(layer);
    apply_scl(layer + 1);
  }

  // A_l E' = E' F'_C entrywise. Row t of F'_C is constant [C | 0] for
  // t < 2k and free for t >= 2k.
  for (std::size_t r = 0; r < 2 * n; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      bool rhs_const = false;
      std::vector<Node> parity{m[r][c]};
      for (std::size_t t = 0; t < cols; ++t) {
        if (!enc.e_prime.get(r, t)) continue;
        if (t < 2 * k) {
          if (c < 2 * k && target_c.get(t, c)) rhs_const = !rhs_const;
        } else {
          parity.push_back(node_of(sat::mk_lit(inst.fprime_vars[t - 2 * k][c])));
        }
      }
      b.require_parity(std::move(parity), rhs_const);
    }
  }
  return inst;
}

bool satisfies(const SatInstance& inst, const std::vector<bool>& model) {
  if (model.size() < static_cast<std::size_t>(inst.cnf.num_vars)) return false;
  for (const auto& clause : inst.cnf.clauses) {
    bool sat = false;
    for (sat::Lit lit : clause)
      if (model[static_cast<std::size_t>(sat::lit_var(lit))] != sat::lit_sign(lit)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

}  // namespace lcs
