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

#include "lcs/connectivity.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcs {

std::vector<std::pair<std::size_t, std::size_t>> ConnectivityGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (adj.get(u, v)) out.emplace_back(u + 1, v + 1);
  return out;
}

bool ConnectivityGraph::is_connected() const {
  if (n == 0) return true;
  std::vector<bool> visited(n, false);
  std::deque<std::size_t> queue{0};
  visited[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v)
      if (adj.get(u, v) && !visited[v]) {
        visited[v] = true;
        ++count;
        queue.push_back(v);
      }
  }
  return count == n;
}

std::vector<std::size_t> ConnectivityGraph::shortest_path(std::size_t u,
                                                          std::size_t v) const {
  const std::size_t src = u - 1, dst = v - 1;
  std::vector<std::size_t> prev(n, SIZE_MAX);
  std::vector<bool> visited(n, false);
  std::deque<std::size_t> queue{src};
  visited[src] = true;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    if (a == dst) break;
    for (std::size_t b = 0; b < n; ++b)
      if (adj.get(a, b) && !visited[b]) {
        visited[b] = true;
        prev[b] = a;
        queue.push_back(b);
      }
  }
  if (!visited[dst]) throw std::invalid_argument("qubits are not connected");
  std::vector<std::size_t> path{dst + 1};
  for (std::size_t a = dst; a != src; a = prev[a]) path.push_back(prev[a] + 1);
  std::reverse(path.begin(), path.end());
  return path;
}

ConnectivityGraph make_connectivity(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::string name) {
  ConnectivityGraph g{n, BitMatrix(n, n), std::move(name)};
  for (const auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n || u == v)
      throw std::invalid_argument("invalid edge in connectivity graph");
    g.adj.set(u - 1, v - 1, true);
    g.adj.set(v - 1, u - 1, true);
  }
  return g;
}

ConnectivityGraph conn_star(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return make_connectivity(n, edges, "star:" + std::to_string(n));
}

ConnectivityGraph conn_line(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 1; v + 1 <= n; ++v) edges.emplace_back(v, v + 1);
  return make_connectivity(n, edges, "line:" + std::to_string(n));
}

ConnectivityGraph conn_ring(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 1; v + 1 <= n; ++v) edges.emplace_back(v, v + 1);
  if (n > 2) edges.emplace_back(1, n);
  return make_connectivity(n, edges, "ring:" + std::to_string(n));
}

ConnectivityGraph conn_grid(std::size_t rows, std::size_t cols) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c + 1; };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return make_connectivity(rows * cols, edges,
                           "grid:" + std::to_string(rows) + "x" + std::to_string(cols));
}

ConnectivityGraph conn_cube8() {
  // Vertex v at coordinates ((v-1)&1, (v-1)>>1&1, (v-1)>>2&1).
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < 8; ++u)
    for (std::size_t v = u + 1; v < 8; ++v) {
      const std::size_t diff = u ^ v;
      if ((diff & (diff - 1)) == 0) edges.emplace_back(u + 1, v + 1);
    }
  return make_connectivity(8, edges, "cube8");
}

ConnectivityGraph conn_complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return make_connectivity(n, edges, "complete:" + std::to_string(n));
}

ConnectivityGraph parse_connectivity(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto parse_count = [&tail, &spec]() -> std::size_t {
    try {
      return static_cast<std::size_t>(std::stoul(tail));
    } catch (...) {
      throw std::invalid_argument("bad connectivity spec: " + spec);
    }
  };
  if (head == "star") return conn_star(parse_count());
  if (head == "line") return conn_line(parse_count());
  if (head == "ring") return conn_ring(parse_count());
  if (head == "complete") return conn_complete(parse_count());
  if (head == "cube8") return conn_cube8();
  if (head == "grid") {
    const auto x = tail.find('x');
    if (x == std::string::npos)
      throw std::invalid_argument("grid spec wants grid:RxC");
    return conn_grid(std::stoul(tail.substr(0, x)), std::stoul(tail.substr(x + 1)));
  }
  return read_edge_list_file(spec);
}

ConnectivityGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open connectivity file: " + path);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::size_t u = 0, v = 0;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) throw std::invalid_argument("edge list line needs two qubits");
    edges.emplace_back(u, v);
    n = std::max({n, u, v});
  }
  return make_connectivity(n, edges, path);
}

}  // namespace lcs
