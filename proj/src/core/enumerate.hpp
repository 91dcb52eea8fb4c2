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

#ifndef FLOWCENT_CORE_ENUMERATE_HPP_
#define FLOWCENT_CORE_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "core/graph.hpp"

namespace flowcent {

class Analysis;

/// One directed simple cycle in canonical rotation (smallest vertex first).
/// On undirected graphs each edge is a 2-cycle and longer cycles appear in
/// both orientations, as required by the walk algebra.
struct SimpleCycle {
  std::vector<int> vertices;
  double weight = 1.0;  // product of arc weights

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSubset vertex_set() const;
};

/// Simple path; the empty vertex list is the stationary path (length 0,
/// weight 1).
struct SimplePath {
  std::vector<int> vertices;
  double weight = 1.0;

  int length() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }
};

/// All directed simple cycles of length <= max_len, each exactly once,
/// sorted ascending by (length, lexicographic vertex sequence).
/// Smallest-vertex-anchored DFS with reverse-reachability pruning, so the
/// length bound cannot drop cycles.
std::vector<SimpleCycle> simple_cycles(const Graph& g, int max_len);

/// Connected k-vertex subsets of the undirected skeleton, each exactly once
/// (ESU enumeration keyed on vertex indices; deterministic order). Return
/// false from the visitor to stop early.
void for_each_connected_subset(
    const Graph& g, int k, const std::function<bool(const VertexSubset&)>& visit);

/// Number of connected k-subsets, counting stops at cap.
std::uint64_t count_connected_subsets(const Graph& g, int k, std::uint64_t cap);

/// Simple paths from `from` to `to` with at most max_len arcs (pass a
/// negative bound for the exact n-1 default). from == to yields exactly the
/// stationary path.
void for_each_simple_path(const Graph& g, int from, int to, int max_len,
                          const std::function<void(const SimplePath&)>& visit);

struct DistributionRow {
  VertexSubset subset;
  double c = 0.0;
  double c_norm = 0.0;
  int group_degree = 0;
  double group_degree_norm = 0.0;
  double closeness_sum = 0.0;
  double closeness_avg = 0.0;
  double betweenness = 0.0;
};

/// c(H) plus the group-centrality baselines for every connected k-subset,
/// sorted descending by c with label-lexicographic tie-break. Evaluation
/// fans out over `workers` threads; the output is identical for any worker
/// count. Throws with the pre-estimated count when it exceeds budget.
std::vector<DistributionRow> centrality_distribution(const Analysis& analysis,
                                                     int k, int workers,
                                                     std::uint64_t budget);

}  // namespace flowcent

#endif  // FLOWCENT_CORE_ENUMERATE_HPP_
