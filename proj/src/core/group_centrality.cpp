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

#include "core/group_centrality.hpp"

#include <limits>
#include <queue>
#include <vector>

#include "core/errors.hpp"

namespace flowcent {

namespace {

constexpr int kUnreached = -1;

std::vector<std::vector<int>> skeleton_adjacency(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && (g.has_arc(u, v) || g.has_arc(v, u))) adj[u].push_back(v);
    }
  }
  return adj;
}

// BFS with geodesic counting from `source`, skipping blocked vertices.
void bfs_counting(const std::vector<std::vector<int>>& adj,
                  const std::vector<char>& blocked, int source,
                  std::vector<int>& dist, std::vector<double>& sigma) {
  const int n = static_cast<int>(adj.size());
  dist.assign(n, kUnreached);
  sigma.assign(n, 0.0);
  if (blocked[source]) return;
  std::queue<int> q;
  dist[source] = 0;
  sigma[source] = 1.0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (blocked[v]) continue;
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
      if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
    }
  }
}

void require_nonempty(const VertexSubset& h) {
  if (h.empty()) {
    fail(ErrorCode::invalid_argument, "group centrality of an empty subset");
  }
}

}  // namespace

int group_degree(const Graph& g, const VertexSubset& h) {
  VertexSubset set = make_subset(h, g.node_count());
  require_nonempty(set);
  std::vector<char> inside(g.node_count(), 0);
  for (int v : set) inside[v] = 1;
  int degree = 0;
  for (int v = 0; v < g.node_count(); ++v) {
    if (inside[v]) continue;
    for (int u : set) {
      if (g.has_arc(u, v) || g.has_arc(v, u)) {
        ++degree;
        break;
      }
    }
  }
  return degree;
}

double group_degree_normalized(const Graph& g, const VertexSubset& h) {
  VertexSubset set = make_subset(h, g.node_count());
  require_nonempty(set);
  const int outside = g.node_count() - static_cast<int>(set.size());
  if (outside == 0) return 0.0;
  return static_cast<double>(group_degree(g, set)) / outside;
}

std::pair<double, double> group_closeness(const Graph& g, const VertexSubset& h) {
  VertexSubset set = make_subset(h, g.node_count());
  require_nonempty(set);
  const int n = g.node_count();
  auto adj = skeleton_adjacency(g);
  // Multi-source BFS: d(h, v) = min over members.
  std::vector<int> dist(n, kUnreached);
  std::queue<int> q;
  for (int v : set) {
    dist[v] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  std::vector<char> inside(n, 0);
  for (int v : set) inside[v] = 1;
  double sum = 0.0;
  int outside = 0;
  bool unreachable = false;
  for (int v = 0; v < n; ++v) {
    if (inside[v]) continue;
    ++outside;
    if (dist[v] == kUnreached) {
      unreachable = true;
    } else {
      sum += dist[v];
    }
  }
  if (outside == 0) return {0.0, 0.0};
  if (unreachable) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  return {sum, sum / outside};
}

double group_betweenness(const Graph& g, const VertexSubset& h) {
  VertexSubset set = make_subset(h, g.node_count());
  require_nonempty(set);
  const int n = g.node_count();
  auto adj = skeleton_adjacency(g);
  std::vector<char> inside(n, 0);
  for (int v : set) inside[v] = 1;
  std::vector<char> none(n, 0);

  double total = 0.0;
  std::vector<int> dist_all, dist_avoid;
  std::vector<double> sigma_all, sigma_avoid;
  for (int u = 0; u < n; ++u) {
    if (inside[u]) continue;
    bfs_counting(adj, none, u, dist_all, sigma_all);
    bfs_counting(adj, inside, u, dist_avoid, sigma_avoid);
    for (int v = u + 1; v < n; ++v) {
      if (inside[v] || dist_all[v] == kUnreached) continue;
      // Geodesics avoiding h are those in G \ h of the same length.
      double avoid = (dist_avoid[v] == dist_all[v]) ? sigma_avoid[v] : 0.0;
      total += (sigma_all[v] - avoid) / sigma_all[v];
    }
  }
  return total;
}

GroupCentralityRow group_centrality_row(const Graph& g, const VertexSubset& h) {
  GroupCentralityRow row;
  row.subset = make_subset(h, g.node_count());
  row.degree = group_degree(g, row.subset);
  auto [sum, avg] = group_closeness(g, row.subset);
  row.closeness_sum = sum;
  row.closeness_avg = avg;
  row.betweenness = group_betweenness(g, row.subset);
  return row;
}

}  // namespace flowcent
