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

#ifndef FLOWCENT_CORE_GRAPH_HPP_
#define FLOWCENT_CORE_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flowcent {

/// Sorted, duplicate-free vertex indices into one specific Graph.
using VertexSubset = std::vector<int>;

/// Validates, sorts and deduplicate-checks a vertex list against a graph of
/// size n. Throws on out-of-range indices or duplicates.
VertexSubset make_subset(std::span<const int> vertices, int n);

/// V \ h for a graph of size n; h must be sorted.
VertexSubset subset_complement(const VertexSubset& h, int n);

struct Edge {
  int src;
  int dst;
  double weight;
};

/// Weighted, optionally directed graph over a dense adjacency matrix.
/// Undirected graphs are stored as the symmetric digraph: each edge
/// contributes two opposite arcs, so a back-and-forth traversal of an
/// undirected edge is a length-2 simple cycle.
///
/// Immutable after construction; safe to share read-only across threads.
class Graph {
 public:
  Graph() = default;

  /// Parses `src<sep>dst[<sep>weight]` lines, sep any of comma/tab/space.
  /// `#`-prefixed lines and blank lines are skipped. Labels are assigned in
  /// first-appearance order; repeated edges accumulate their weights.
  static Graph load_edge_list(std::string_view text, bool directed);

  /// Direct construction for generated graphs. Labels default to a, b, ...
  /// for n <= 26 and v0, v1, ... beyond. Repeated edges accumulate.
  static Graph from_edges(int n, bool directed, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  int node_count() const { return n_; }
  bool directed() const { return directed_; }
  bool nonnegative() const { return nonnegative_; }
  bool integer_weights() const { return integer_weights_; }
  bool unweighted() const;  // every weight is 0 or 1

  double weight(int i, int j) const { return adj_[idx(i, j)]; }
  bool has_arc(int i, int j) const { return adj_[idx(i, j)] != 0.0; }
  const std::vector<double>& adjacency() const { return adj_; }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// -1 when the label is unknown.
  int find_label(std::string_view label) const;

  /// Graph on V \ h: rows/columns of h removed. h = V yields the size-0
  /// sentinel graph whose identity determinant is 1.
  Graph delete_vertices(const VertexSubset& h) const;

  /// Graph on exactly the vertices of h.
  Graph induced_subgraph(const VertexSubset& h) const;

  /// Weak connectivity (arc direction ignored) of the subgraph induced by h.
  /// h must be non-empty.
  bool is_connected(const VertexSubset& h) const;

  bool connected() const;  // weak, whole graph
  bool strongly_connected() const;
  bool bipartite() const;  // on the undirected skeleton

  std::vector<int> out_neighbors(int v) const;
  /// Neighbors in either direction, self excluded unless self-loop.
  std::vector<int> skeleton_neighbors(int v) const;

  /// Inverse of load_edge_list: weights printed with enough digits to
  /// round-trip doubles bit-exactly.
  std::string to_edge_list() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  void add_weight(int i, int j, double w);
  void refresh_flags();

  int n_ = 0;
  bool directed_ = false;
  std::vector<double> adj_;
  std::vector<std::string> labels_;
  bool nonnegative_ = true;
  bool integer_weights_ = true;
};

std::vector<std::string> default_labels(int n);

}  // namespace flowcent

#endif  // FLOWCENT_CORE_GRAPH_HPP_
