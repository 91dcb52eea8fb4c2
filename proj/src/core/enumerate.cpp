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

#include "core/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <queue>
#include <string>
#include <thread>

#include "core/centrality.hpp"
#include "core/errors.hpp"
#include "core/group_centrality.hpp"

namespace flowcent {

VertexSubset SimpleCycle::vertex_set() const {
  VertexSubset s(vertices);
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// Cycles anchored at their smallest vertex. Vertices below the root are
// excluded, so each directed simple cycle is found exactly once, starting
// at its minimum. dist_to_root prunes branches that cannot close within
// the length bound.
struct CycleSearch {
  CycleSearch(const Graph& graph, int anchor, int bound)
      : g(graph), root(anchor), max_len(bound) {}

  const Graph& g;
  int root;
  int max_len;
  std::vector<int> path;
  std::vector<char> on_path;
  std::vector<int> dist_to_root;  // shortest arc-distance v -> root, allowed set
  double weight = 1.0;
  std::vector<SimpleCycle>* out = nullptr;

  void run() {
    // Reverse BFS from root across vertices >= root.
    const int n = g.node_count();
    dist_to_root.assign(n, -1);
    std::queue<int> q;
    dist_to_root[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = root; v < n; ++v) {
        if (dist_to_root[v] == -1 && g.has_arc(v, u)) {
          dist_to_root[v] = dist_to_root[u] + 1;
          q.push(v);
        }
      }
    }
    on_path.assign(n, 0);
    path.push_back(root);
    on_path[root] = 1;
    extend();
  }

  void extend() {
    const int u = path.back();
    const int len = static_cast<int>(path.size());
    const double w_close = g.weight(u, root);
    if (w_close != 0.0 && len <= max_len) {
      out->push_back({path, weight * w_close});
    }
    if (len >= max_len) return;
    for (int v = root + 1; v < g.node_count(); ++v) {
      if (on_path[v] || !g.has_arc(u, v)) continue;
      if (dist_to_root[v] == -1 || len + dist_to_root[v] > max_len) continue;
      on_path[v] = 1;
      path.push_back(v);
      const double w = weight;
      weight *= g.weight(u, v);
      extend();
      weight = w;
      path.pop_back();
      on_path[v] = 0;
    }
  }
};

struct EsuSearch {
  EsuSearch(const std::vector<std::vector<int>>& skeleton_adj, int size,
            const std::function<bool(const VertexSubset&)>& visitor)
      : adj(skeleton_adj), k(size), visit(visitor) {}

  const std::vector<std::vector<int>>& adj;
  int k;
  const std::function<bool(const VertexSubset&)>& visit;
  int root = 0;
  VertexSubset sub;
  std::vector<char> in_sub;
  std::vector<char> seen;  // root-excluded or already in some neighborhood
  bool stopped = false;

  bool extend(std::vector<int> extension) {
    if (static_cast<int>(sub.size()) == k) {
      VertexSubset sorted = sub;
      std::sort(sorted.begin(), sorted.end());
      if (!visit(sorted)) stopped = true;
      return !stopped;
    }
    while (!extension.empty()) {
      int w = extension.front();
      extension.erase(extension.begin());
      std::vector<int> next = extension;
      std::vector<int> added;
      for (int u : adj[w]) {
        if (u > root && !in_sub[u] && !seen[u]) {
          next.push_back(u);
          seen[u] = 1;
          added.push_back(u);
        }
      }
      sub.push_back(w);
      in_sub[w] = 1;
      bool keep_going = extend(std::move(next));
      in_sub[w] = 0;
      sub.pop_back();
      for (int u : added) seen[u] = 0;
      if (!keep_going) return false;
    }
    return true;
  }
};

std::vector<std::vector<int>> skeleton(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && (g.has_arc(u, v) || g.has_arc(v, u))) adj[u].push_back(v);
    }
  }
  return adj;
}

}  // namespace

std::vector<SimpleCycle> simple_cycles(const Graph& g, int max_len) {
  if (max_len < 1) {
    fail(ErrorCode::invalid_argument, "simple_cycles: max_len must be >= 1");
  }
  std::vector<SimpleCycle> out;
  for (int root = 0; root < g.node_count(); ++root) {
    CycleSearch search(g, root, max_len);
    search.out = &out;
    search.run();
  }
  std::sort(out.begin(), out.end(), [](const SimpleCycle& a, const SimpleCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

void for_each_connected_subset(
    const Graph& g, int k, const std::function<bool(const VertexSubset&)>& visit) {
  const int n = g.node_count();
  if (k < 1 || k > n) {
    fail(ErrorCode::invalid_argument,
         "connected subset size must be in [1, n], got " + std::to_string(k));
  }
  auto adj = skeleton(g);
  for (int v = 0; v < n; ++v) {
    EsuSearch search(adj, k, visit);
    search.root = v;
    search.in_sub.assign(n, 0);
    search.seen.assign(n, 0);
    search.sub = {v};
    search.in_sub[v] = 1;
    std::vector<int> extension;
    for (int u : adj[v]) {
      if (u > v) {
        extension.push_back(u);
        search.seen[u] = 1;
      }
    }
    if (!search.extend(std::move(extension))) return;
  }
}

std::uint64_t count_connected_subsets(const Graph& g, int k, std::uint64_t cap) {
  std::uint64_t count = 0;
  for_each_connected_subset(g, k, [&](const VertexSubset&) {
    ++count;
    return count < cap;
  });
  return count;
}

void for_each_simple_path(const Graph& g, int from, int to, int max_len,
                          const std::function<void(const SimplePath&)>& visit) {
  const int n = g.node_count();
  if (from < 0 || from >= n || to < 0 || to >= n) {
    fail(ErrorCode::invalid_argument, "simple path endpoints out of range");
  }
  if (from == to) {
    visit(SimplePath{});
    return;
  }
  if (max_len < 0) max_len = n - 1;
  std::vector<char> on_path(n, 0);
  SimplePath p;
  p.vertices.push_back(from);
  on_path[from] = 1;

  auto dfs = [&](auto&& self, int u) -> void {
    if (u == to) {
      visit(p);
      return;
    }
    if (p.length() >= max_len) return;
    for (int v = 0; v < n; ++v) {
      if (on_path[v] || !g.has_arc(u, v)) continue;
      on_path[v] = 1;
      p.vertices.push_back(v);
      const double w = p.weight;
      p.weight *= g.weight(u, v);
      self(self, v);
      p.weight = w;
      p.vertices.pop_back();
      on_path[v] = 0;
    }
  };
  dfs(dfs, from);
}

std::vector<DistributionRow> centrality_distribution(const Analysis& analysis,
                                                     int k, int workers,
                                                     std::uint64_t budget) {
  const Graph& g = analysis.graph();
  if (workers < 1) fail(ErrorCode::invalid_argument, "workers must be >= 1");
  if (budget == 0) fail(ErrorCode::invalid_argument, "budget must be positive");

  const std::uint64_t estimate = count_connected_subsets(g, k, budget + 1);
  if (estimate > budget) {
    fail(ErrorCode::budget,
         "connected " + std::to_string(k) + "-subset count exceeds budget " +
             std::to_string(budget) + " (estimated >= " +
             std::to_string(estimate) + ")");
  }

  std::vector<VertexSubset> subsets;
  subsets.reserve(estimate);
  for_each_connected_subset(g, k, [&](const VertexSubset& s) {
    subsets.push_back(s);
    return true;
  });
  std::sort(subsets.begin(), subsets.end());  // canonical evaluation order

  analysis.spectrum();  // materialize the shared cache before fan-out

  std::vector<DistributionRow> rows(subsets.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    constexpr std::size_t chunk = 8;
    try {
      for (;;) {
        const std::size_t begin = cursor.fetch_add(chunk);
        if (begin >= subsets.size()) return;
        const std::size_t end = std::min(begin + chunk, subsets.size());
        for (std::size_t i = begin; i < end; ++i) {
          DistributionRow& row = rows[i];
          row.subset = subsets[i];
          row.c = analysis.centrality_value(row.subset);
          GroupCentralityRow gc = group_centrality_row(g, row.subset);
          row.group_degree = gc.degree;
          row.closeness_sum = gc.closeness_sum;
          row.closeness_avg = gc.closeness_avg;
          row.betweenness = gc.betweenness;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      cursor.store(subsets.size());
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  double c_max = 0.0;
  int deg_max = 0;
  for (const auto& row : rows) {
    c_max = std::max(c_max, row.c);
    deg_max = std::max(deg_max, row.group_degree);
  }
  for (auto& row : rows) {
    row.c_norm = c_max > 0.0 ? row.c / c_max : 0.0;
    row.group_degree_norm =
        deg_max > 0 ? static_cast<double>(row.group_degree) / deg_max : 0.0;
  }

  // Descending by c; ties broken by the label sequence so the published
  // order is reproducible.
  std::vector<std::string> keys(rows.size());
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    order[i] = i;
    std::string key;
    for (int v : rows[i].subset) {
      key += g.label(v);
      key += ';';
    }
    keys[i] = std::move(key);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a].c != rows[b].c) return rows[a].c > rows[b].c;
    return keys[a] < keys[b];
  });
  std::vector<DistributionRow> sorted;
  sorted.reserve(rows.size());
  for (std::size_t i : order) sorted.push_back(std::move(rows[i]));
  return sorted;
}

}  // namespace flowcent
