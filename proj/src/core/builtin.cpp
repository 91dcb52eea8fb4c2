/*
 *   Copyright 2026 the flowcent authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "core/builtin.hpp"

#include <algorithm>
#include <set>

namespace flowcent {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph::from_edges(n, false, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph::from_edges(n, false, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  }
  return Graph::from_edges(n, false, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return Graph::from_edges(leaves + 1, false, edges);
}

Graph self_loop_graph() {
  const Edge loop{0, 0, 1.0};
  return Graph::from_edges(1, true, std::span<const Edge>(&loop, 1));
}

Graph two_node_digraph() {
  std::vector<Edge> edges{{0, 1, 1.0}, {1, 0, 1.0}};
  return Graph::from_edges(2, true, edges);
}

Graph isolated_vertex() {
  return Graph::from_edges(1, false, std::span<const Edge>{});
}

Graph random_connected_undirected(int n, double extra_p, bool weighted,
                                  SplitMix64& rng) {
  auto draw = [&] { return weighted ? 0.5 + 2.0 * rng.uniform() : 1.0; };
  std::set<std::pair<int, int>> present;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.below(v));
    present.insert({u, v});
    edges.push_back({u, v, draw()});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (present.count({u, v})) continue;
      if (rng.chance(extra_p)) edges.push_back({u, v, draw()});
    }
  }
  return Graph::from_edges(n, false, edges);
}

Graph random_strongly_connected_digraph(int n, double extra_p, bool aperiodic,
                                        SplitMix64& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.below(i + 1)]);
  }
  std::set<std::pair<int, int>> present;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    int u = order[i], v = order[(i + 1) % n];
    present.insert({u, v});
    edges.push_back({u, v, 1.0});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || present.count({u, v})) continue;
      if (rng.chance(extra_p)) edges.push_back({u, v, 1.0});
    }
  }
  if (aperiodic) {
    int v = static_cast<int>(rng.below(n));
    edges.push_back({v, v, 1.0});
  }
  return Graph::from_edges(n, true, edges);
}

Graph random_nonnegative_graph(int n, bool directed, SplitMix64& rng) {
  auto draw = [&] {
    // Mix of integers and fractional weights.
    return rng.chance(0.5) ? static_cast<double>(1 + rng.below(3))
                           : 0.25 + 3.75 * rng.uniform();
  };
  std::vector<Edge> edges;
  if (directed) {
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, draw()});
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if (rng.chance(0.25)) edges.push_back({u, v, draw()});
      }
    }
  } else {
    edges.push_back({0, n > 1 ? 1 : 0, draw()});
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (u == 0 && v == 1) continue;
        if (rng.chance(0.3)) edges.push_back({u, v, draw()});
      }
    }
  }
  return Graph::from_edges(n, directed, edges);
}

Graph random_graph_exact_edges(int n, int m, SplitMix64& rng) {
  std::set<std::pair<int, int>> present;
  std::vector<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!present.insert({u, v}).second) continue;
    edges.push_back({u, v, 1.0});
  }
  return Graph::from_edges(n, false, edges);
}

std::vector<std::pair<std::string, Graph>> verification_graphs(
    int seeds, std::uint64_t seed_base) {
  std::vector<std::pair<std::string, Graph>> out;
  out.emplace_back("P3", path_graph(3));
  out.emplace_back("K3", complete_graph(3));
  out.emplace_back("C4", cycle_graph(4));
  out.emplace_back("K4", complete_graph(4));
  for (int s = 1; s <= seeds; ++s) {
    SplitMix64 rng(seed_base + s);
    int n = 3 + static_cast<int>(rng.below(3));  // 3..5
    out.emplace_back("scc-n" + std::to_string(n) + "-s" + std::to_string(s),
                     random_strongly_connected_digraph(n, 0.3, false, rng));
  }
  return out;
}

std::vector<std::pair<std::string, Graph>> aperiodic_digraphs(
    int seeds, std::uint64_t seed_base) {
  std::vector<std::pair<std::string, Graph>> out;
  for (int s = 1; s <= seeds; ++s) {
    SplitMix64 rng(seed_base + s);
    int n = 4 + static_cast<int>(rng.below(2));  // 4..5
    out.emplace_back("aper-n" + std::to_string(n) + "-s" + std::to_string(s),
                     random_strongly_connected_digraph(n, 0.4, true, rng));
  }
  return out;
}

}  // namespace flowcent
