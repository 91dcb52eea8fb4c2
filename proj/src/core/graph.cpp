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

#include "core/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <unordered_map>

#include "core/errors.hpp"

namespace flowcent {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == '\t' || c == ' '; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

double parse_weight(std::string_view field, int line_no) {
  std::string buf(field);
  char* end = nullptr;
  double w = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || !std::isfinite(w)) {
    fail(ErrorCode::parse, "line " + std::to_string(line_no) +
                               ": weight not parseable as real: '" + buf + "'");
  }
  return w;
}

}  // namespace

VertexSubset make_subset(std::span<const int> vertices, int n) {
  VertexSubset h(vertices.begin(), vertices.end());
  std::sort(h.begin(), h.end());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0 || h[i] >= n) {
      fail(ErrorCode::invalid_argument,
           "vertex index " + std::to_string(h[i]) + " out of range [0, " +
               std::to_string(n) + ")");
    }
    if (i > 0 && h[i] == h[i - 1]) {
      fail(ErrorCode::invalid_argument,
           "duplicate vertex index " + std::to_string(h[i]) + " in subset");
    }
  }
  return h;
}

VertexSubset subset_complement(const VertexSubset& h, int n) {
  VertexSubset out;
  out.reserve(n - h.size());
  std::size_t j = 0;
  for (int v = 0; v < n; ++v) {
    if (j < h.size() && h[j] == v) {
      ++j;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (n <= 26) {
      labels.emplace_back(1, static_cast<char>('a' + i));
    } else {
      labels.push_back("v" + std::to_string(i));
    }
  }
  return labels;
}

Graph Graph::load_edge_list(std::string_view text, bool directed) {
  struct RawEdge {
    int src, dst;
    double w;
  };
  std::vector<RawEdge> edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index_of;

  auto intern = [&](std::string_view s) {
    auto it = index_of.find(std::string(s));
    if (it != index_of.end()) return it->second;
    int id = static_cast<int>(labels.size());
    labels.emplace_back(s);
    index_of.emplace(labels.back(), id);
    return id;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2 || fields.size() > 3) {
      fail(ErrorCode::parse, "line " + std::to_string(line_no) +
                                 ": expected src, dst[, weight]");
    }
    int s = intern(fields[0]);
    int d = intern(fields[1]);
    double w = fields.size() == 3 ? parse_weight(fields[2], line_no) : 1.0;
    edges.push_back({s, d, w});
  }
  if (labels.empty()) fail(ErrorCode::parse, "empty input: no edges found");

  Graph g;
  g.n_ = static_cast<int>(labels.size());
  g.directed_ = directed;
  g.labels_ = std::move(labels);
  g.adj_.assign(static_cast<std::size_t>(g.n_) * g.n_, 0.0);
  for (const auto& e : edges) g.add_weight(e.src, e.dst, e.w);
  g.refresh_flags();
  return g;
}

Graph Graph::from_edges(int n, bool directed, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (n < 0) fail(ErrorCode::invalid_argument, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.directed_ = directed;
  g.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(g.labels_.size()) != n) {
    fail(ErrorCode::invalid_argument, "label count does not match n");
  }
  g.adj_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
      fail(ErrorCode::invalid_argument, "edge endpoint out of range");
    }
    g.add_weight(e.src, e.dst, e.weight);
  }
  g.refresh_flags();
  return g;
}

void Graph::add_weight(int i, int j, double w) {
  adj_[idx(i, j)] += w;
  if (!directed_ && i != j) adj_[idx(j, i)] += w;
}

void Graph::refresh_flags() {
  nonnegative_ = true;
  integer_weights_ = true;
  for (double w : adj_) {
    if (w < 0) nonnegative_ = false;
    if (w != std::floor(w) || std::abs(w) > 9.007199254740992e15) {
      integer_weights_ = false;
    }
  }
}

bool Graph::unweighted() const {
  for (double w : adj_) {
    if (w != 0.0 && w != 1.0) return false;
  }
  return true;
}

int Graph::find_label(std::string_view label) const {
  for (int v = 0; v < n_; ++v) {
    if (labels_[v] == label) return v;
  }
  return -1;
}

Graph Graph::delete_vertices(const VertexSubset& h) const {
  return induced_subgraph(subset_complement(make_subset(h, n_), n_));
}

Graph Graph::induced_subgraph(const VertexSubset& h) const {
  VertexSubset keep = make_subset(h, n_);
  Graph g;
  g.n_ = static_cast<int>(keep.size());
  g.directed_ = directed_;
  g.adj_.assign(static_cast<std::size_t>(g.n_) * g.n_, 0.0);
  g.labels_.reserve(keep.size());
  for (int v : keep) g.labels_.push_back(labels_[v]);
  for (int i = 0; i < g.n_; ++i) {
    for (int j = 0; j < g.n_; ++j) {
      g.adj_[static_cast<std::size_t>(i) * g.n_ + j] = weight(keep[i], keep[j]);
    }
  }
  g.refresh_flags();
  return g;
}

bool Graph::is_connected(const VertexSubset& h) const {
  VertexSubset keep = make_subset(h, n_);
  if (keep.empty()) {
    fail(ErrorCode::invalid_argument, "connectivity of the empty subset");
  }
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<char> seen(keep.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    int u = keep[i];
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (seen[j]) continue;
      int v = keep[j];
      if (has_arc(u, v) || has_arc(v, u)) {
        seen[j] = 1;
        ++reached;
        stack.push_back(static_cast<int>(j));
      }
    }
  }
  return reached == keep.size();
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  VertexSubset all(n_);
  for (int v = 0; v < n_; ++v) all[v] = v;
  return is_connected(all);
}

bool Graph::strongly_connected() const {
  if (n_ == 0) return true;
  auto reach_all = [&](bool reversed) {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n_; ++v) {
        if (seen[v]) continue;
        if (reversed ? has_arc(v, u) : has_arc(u, v)) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    return reached == n_;
  };
  return reach_all(false) && reach_all(true);
}

bool Graph::bipartite() const {
  std::vector<int> color(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (u == s && has_arc(s, s)) return false;  // self-loop
      for (int v : skeleton_neighbors(u)) {
        if (v == u) return false;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> Graph::out_neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (has_arc(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<int> Graph::skeleton_neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (has_arc(v, u) || has_arc(u, v)) out.push_back(u);
  }
  return out;
}

std::string Graph::to_edge_list() const {
  std::string out;
  char buf[64];
  for (int i = 0; i < n_; ++i) {
    for (int j = directed_ ? 0 : i; j < n_; ++j) {
      double w = weight(i, j);
      if (w == 0.0) continue;
      std::snprintf(buf, sizeof(buf), "%.17g", w);
      out += labels_[i];
      out += ',';
      out += labels_[j];
      out += ',';
      out += buf;
      out += '\n';
    }
  }
  return out;
}

}  // namespace flowcent
