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

// Independent brute-force oracles. Everything here recomputes the expected
// values from first principles (cofactor expansions, exhaustive
// enumeration) so the implementations under test share no code path with
// their checks.

#ifndef FLOWCENT_TESTS_ORACLES_HPP_
#define FLOWCENT_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <vector>

#include "core/graph.hpp"

namespace oracles {

using flowcent::Graph;
using flowcent::VertexSubset;

// ---- exact polynomial matrix determinant ------------------------------

using ZPoly = std::vector<mpz_class>;  // coefficient vector, constant first

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline ZPoly zp_addsub(const ZPoly& a, const ZPoly& b, bool add) {
  ZPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (add) {
      out[i] += b[i];
    } else {
      out[i] -= b[i];
    }
  }
  return out;
}

// Cofactor expansion along the first row; exponential, for n <= 8.
inline ZPoly zp_det(std::vector<std::vector<ZPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {mpz_class(1)};
  if (n == 1) return m[0][0];
  ZPoly acc;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<ZPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<ZPoly> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    ZPoly term = zp_mul(m[0][col], zp_det(std::move(minor)));
    acc = zp_addsub(acc, term, col % 2 == 0);
  }
  return acc;
}

// det(I - zA) by cofactor expansion over polynomial entries.
inline std::vector<mpz_class> charpoly_oracle(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long w = std::lround(g.weight(i, j));
      ZPoly p{mpz_class(i == j ? 1 : 0), mpz_class(-w)};
      m[i][j] = p;
    }
  }
  ZPoly det = zp_det(std::move(m));
  while (det.size() > 1 && det.back() == 0) det.pop_back();
  return det;
}

// ---- floating determinant by cofactor expansion ------------------------

inline double det_oracle(const std::vector<double>& a, int n) {
  if (n == 0) return 1.0;
  if (n == 1) return a[0];
  double acc = 0.0;
  for (int col = 0; col < n; ++col) {
    std::vector<double> minor;
    minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 1; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j != col) minor.push_back(a[static_cast<std::size_t>(i) * n + j]);
      }
    }
    double term = a[col] * det_oracle(minor, n - 1);
    acc += (col % 2 == 0) ? term : -term;
  }
  return acc;
}

// ---- exhaustive cycle enumeration --------------------------------------

// Every directed simple cycle as the vertex sequence rotated to start at
// its smallest vertex, found by trying all vertex permutations.
inline std::set<std::vector<int>> brute_cycles(const Graph& g, int max_len) {
  const int n = g.node_count();
  std::set<std::vector<int>> found;
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  std::function<void()> extend = [&] {
    const int len = static_cast<int>(seq.size());
    if (len >= 1 && len <= max_len && g.has_arc(seq.back(), seq.front())) {
      if (*std::min_element(seq.begin(), seq.end()) == seq.front()) {
        found.insert(seq);
      }
    }
    if (len == max_len) return;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (!seq.empty() && !g.has_arc(seq.back(), v)) continue;
      used[v] = 1;
      seq.push_back(v);
      extend();
      seq.pop_back();
      used[v] = 0;
    }
  };
  extend();
  return found;
}

// ---- exhaustive connected subsets ---------------------------------------

inline std::set<VertexSubset> brute_connected_subsets(const Graph& g, int k) {
  const int n = g.node_count();
  std::set<VertexSubset> found;
  std::vector<int> comb;
  std::function<void(int)> choose = [&](int first) {
    if (static_cast<int>(comb.size()) == k) {
      if (g.is_connected(comb)) found.insert(comb);
      return;
    }
    for (int v = first; v < n; ++v) {
      comb.push_back(v);
      choose(v + 1);
      comb.pop_back();
    }
  };
  choose(0);
  return found;
}

// ---- geodesics by exhaustive path listing -------------------------------

struct GeodesicCount {
  int dist = -1;       // -1: unreachable
  long total = 0;      // geodesics u -> v on the skeleton
  long through_h = 0;  // geodesics meeting the group
};

inline GeodesicCount brute_geodesics(const Graph& g, int u, int v,
                                     const VertexSubset& h) {
  const int n = g.node_count();
  std::vector<char> in_h(n, 0);
  for (int x : h) in_h[x] = 1;
  GeodesicCount out;
  std::vector<int> path{u};
  std::vector<char> used(n, 0);
  used[u] = 1;
  std::function<void()> extend = [&] {
    int at = path.back();
    if (at == v) {
      int len = static_cast<int>(path.size()) - 1;
      if (out.dist == -1 || len < out.dist) {
        out.dist = len;
        out.total = 0;
        out.through_h = 0;
      }
      if (len == out.dist) {
        ++out.total;
        for (int x : path) {
          if (in_h[x]) {
            ++out.through_h;
            break;
          }
        }
      }
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (!(g.has_arc(at, w) || g.has_arc(w, at))) continue;
      used[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      used[w] = 0;
    }
  };
  extend();
  return out;
}

}  // namespace oracles

#endif  // FLOWCENT_TESTS_ORACLES_HPP_
