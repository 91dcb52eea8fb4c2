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

#ifndef FLOWCENT_CORE_TEXT_HPP_
#define FLOWCENT_CORE_TEXT_HPP_

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace flowcent {

/// Shortest text that round-trips the double exactly.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Two decimals, rounding halves away from zero (display convention for
/// percent columns; raw values keep full precision elsewhere).
inline std::string fmt_fixed2(double v) {
  double scaled = std::floor(std::abs(v) * 100.0 + 0.5) / 100.0;
  if (v < 0) scaled = -scaled;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", scaled);
  return buf;
}

/// Vertex labels joined by ';' (CSV cells use ';' inside, ',' between).
inline std::string join_labels(const Graph& g, const VertexSubset& subset) {
  std::string out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ';';
    out += g.label(subset[i]);
  }
  return out;
}

inline std::string join_vertex_sequence(const Graph& g,
                                        const std::vector<int>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ';';
    out += g.label(seq[i]);
  }
  return out;
}

}  // namespace flowcent

#endif  // FLOWCENT_CORE_TEXT_HPP_
