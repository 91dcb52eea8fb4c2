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

#include "core/centrality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "core/errors.hpp"
#include "core/matrix.hpp"

namespace flowcent {

namespace {

// Out-of-range c beyond this slack signals a wrong lambda or negative
// weights; values are never clamped.
constexpr double kBoundsDiagnosticSlack = 1e-8;

VertexSubset intersect_sorted(const VertexSubset& a, const VertexSubset& b) {
  VertexSubset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

Analysis::Analysis(Graph g, double tol) : g_(std::move(g)), tol_(tol) {}

const Spectrum& Analysis::spectrum() const {
  std::call_once(spectrum_once_, [this] { spectrum_ = analyze_spectrum(g_, tol_); });
  return *spectrum_;
}

double Analysis::eta() const { return flowcent::eta(g_, spectrum()); }

double Analysis::centrality_value(const VertexSubset& h) const {
  VertexSubset removed = make_subset(h, g_.node_count());
  const double lam = lambda();
  std::vector<double> m;
  std::vector<int> keep;
  const int dim = build_centrality_matrix(g_, removed, 1.0 / lam, m, keep);
  double value = lu_determinant(m, dim);
  if (g_.nonnegative() &&
      (value < -kBoundsDiagnosticSlack || value > 1.0 + kBoundsDiagnosticSlack)) {
    fail(ErrorCode::domain,
         "centrality " + std::to_string(value) +
             " outside [0,1] on a nonnegative graph: inconsistent lambda");
  }
  return value;
}

CentralityReport Analysis::subgraph_centrality(const VertexSubset& h) const {
  CentralityReport r;
  r.subset = make_subset(h, g_.node_count());
  r.lambda_used = lambda();
  r.value = centrality_value(r.subset);
  return r;
}

CentralityReport Analysis::cycle_centrality(const SimpleCycle& gamma) const {
  return subgraph_centrality(gamma.vertex_set());
}

const std::vector<double>& Analysis::eigenvector_centrality() const {
  std::call_once(eigvec_once_, [this] { eigvec_ = dominant_eigenvector(g_); });
  return eigvec_;
}

double Analysis::projector_pathsum(int i, int j, int max_len) const {
  const int n = g_.node_count();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    fail(ErrorCode::invalid_argument, "projector_pathsum: vertex out of range");
  }
  if (g_.directed()) {
    fail(ErrorCode::domain, "projector_pathsum is defined for undirected graphs");
  }
  if (spectrum().lambda_multiplicity != 1) {
    fail(ErrorCode::domain,
         "projector_pathsum requires a simple dominant eigenvalue");
  }
  const double lam = lambda();
  double acc = 0.0;
  for_each_simple_path(g_, i, j, max_len, [&](const SimplePath& p) {
    VertexSubset verts = p.vertices.empty() ? VertexSubset{i}
                                            : make_subset(p.vertices, n);
    acc += std::pow(lam, -p.length()) * p.weight * centrality_value(verts);
  });
  return acc;
}

double Analysis::union_centrality_ie(const std::vector<VertexSubset>& parts) const {
  if (parts.empty()) {
    fail(ErrorCode::invalid_argument, "union_centrality_ie: no parts given");
  }
  if (parts.size() > 20) {
    fail(ErrorCode::invalid_argument,
         "union_centrality_ie: more than 20 parts (2^n terms); evaluate the "
         "union subset directly instead");
  }
  std::vector<VertexSubset> sorted;
  sorted.reserve(parts.size());
  for (const auto& p : parts) {
    VertexSubset part = make_subset(p, g_.node_count());
    if (part.empty() || !g_.is_connected(part)) {
      fail(ErrorCode::invalid_argument,
           "union_centrality_ie: every part must be a non-empty connected "
           "vertex set (intersections may be anything)");
    }
    sorted.push_back(std::move(part));
  }

  double acc = 0.0;
  const std::uint32_t full = 1u << sorted.size();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    VertexSubset inter;
    bool first = true;
    for (std::size_t t = 0; t < sorted.size(); ++t) {
      if (!(mask & (1u << t))) continue;
      inter = first ? sorted[t] : intersect_sorted(inter, sorted[t]);
      first = false;
      if (inter.empty()) break;
    }
    if (inter.empty()) continue;  // c(empty) = 0
    const double sign = (std::popcount(mask) % 2 == 1) ? 1.0 : -1.0;
    acc += sign * centrality_value(inter);
  }
  return acc;
}

double Analysis::flow_overlap(const VertexSubset& s) const {
  VertexSubset set = make_subset(s, g_.node_count());
  if (set.empty()) fail(ErrorCode::invalid_argument, "flow_overlap: empty set");
  if (set.size() > 20) {
    fail(ErrorCode::invalid_argument, "flow_overlap: set larger than 20");
  }
  double acc = 0.0;
  const std::uint32_t full = 1u << set.size();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    VertexSubset sub;
    for (std::size_t t = 0; t < set.size(); ++t) {
      if (mask & (1u << t)) sub.push_back(set[t]);
    }
    const double sign = (std::popcount(mask) % 2 == 1) ? 1.0 : -1.0;
    acc += sign * centrality_value(sub);
  }
  return acc;
}

}  // namespace flowcent
