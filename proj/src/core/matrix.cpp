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

#include "core/matrix.hpp"

#include <cmath>
#include <cstddef>

namespace flowcent {

double lu_determinant(std::vector<double>& a, int n) {
  if (n == 0) return 1.0;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a[static_cast<std::size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(a[static_cast<std::size_t>(i) * n + k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = k; j < n; ++j) {
        std::swap(a[static_cast<std::size_t>(k) * n + j],
                  a[static_cast<std::size_t>(piv) * n + j]);
      }
      det = -det;
    }
    const double pivot = a[static_cast<std::size_t>(k) * n + k];
    det *= pivot;
    const double* row_k = &a[static_cast<std::size_t>(k) * n];
    for (int i = k + 1; i < n; ++i) {
      double* row_i = &a[static_cast<std::size_t>(i) * n];
      double l = row_i[k] / pivot;
      if (l == 0.0) continue;
      for (int j = k + 1; j < n; ++j) row_i[j] -= l * row_k[j];
    }
  }
  return det;
}

int build_centrality_matrix(const Graph& g, const VertexSubset& removed,
                            double inv_lambda, std::vector<double>& out,
                            std::vector<int>& scratch) {
  const int n = g.node_count();
  scratch.clear();
  std::size_t r = 0;
  for (int v = 0; v < n; ++v) {
    if (r < removed.size() && removed[r] == v) {
      ++r;
    } else {
      scratch.push_back(v);
    }
  }
  const int m = static_cast<int>(scratch.size());
  out.resize(static_cast<std::size_t>(m) * m);
  const std::vector<double>& adj = g.adjacency();
  for (int i = 0; i < m; ++i) {
    const double* arow = &adj[static_cast<std::size_t>(scratch[i]) * n];
    double* orow = &out[static_cast<std::size_t>(i) * m];
    for (int j = 0; j < m; ++j) orow[j] = -inv_lambda * arow[scratch[j]];
    orow[i] += 1.0;
  }
  return m;
}

}  // namespace flowcent
