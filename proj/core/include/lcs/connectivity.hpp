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

#include <string>
#include <utility>
#include <vector>

#include "lcs/bitmat.hpp"

namespace lcs {

/// Hardware qubit connectivity as a symmetric adjacency matrix with zero
/// diagonal. Qubits are 1-indexed at the API surface.
struct ConnectivityGraph {
  std::size_t n = 0;
  BitMatrix adj;  // n x n
  std::string name;

  bool has_edge(std::size_t u, std::size_t v) const {
    return adj.get(u - 1, v - 1);
  }
  /// Edges as 1-indexed pairs (u < v), row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const { return edges().size(); }
  bool is_connected() const;
  /// BFS shortest path between 1-indexed endpoints, inclusive.
  std::vector<std::size_t> shortest_path(std::size_t u, std::size_t v) const;
};

ConnectivityGraph make_connectivity(std::size_t n,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    std::string name = "");

ConnectivityGraph conn_star(std::size_t n);
ConnectivityGraph conn_line(std::size_t n);
ConnectivityGraph conn_ring(std::size_t n);
ConnectivityGraph conn_grid(std::size_t rows, std::size_t cols);
ConnectivityGraph conn_cube8();
ConnectivityGraph conn_complete(std::size_t n);

/// Preset specs: star:N, line:N, ring:N, grid:RxC, cube8, complete:N.
/// Anything else is treated as the path of an edge-list file with one
/// "u v" pair per line (1-indexed, `#` comments).
ConnectivityGraph parse_connectivity(const std::string& spec);
ConnectivityGraph read_edge_list_file(const std::string& path);

}  // namespace lcs
