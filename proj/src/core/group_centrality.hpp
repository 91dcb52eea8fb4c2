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

#ifndef FLOWCENT_CORE_GROUP_CENTRALITY_HPP_
#define FLOWCENT_CORE_GROUP_CENTRALITY_HPP_

#include <utility>

#include "core/graph.hpp"

namespace flowcent {

// Group-centrality baselines. All distances are unweighted hop counts on
// the undirected skeleton, which is also what directed inputs are reduced
// to (the reference definitions and datasets are undirected).

struct GroupCentralityRow {
  VertexSubset subset;
  int degree = 0;
  double closeness_sum = 0.0;  // infinite when some vertex is unreachable
  double closeness_avg = 0.0;
  double betweenness = 0.0;
};

/// Number of outside vertices adjacent (in either direction, weights
/// ignored) to at least one member of h.
int group_degree(const Graph& g, const VertexSubset& h);

/// group_degree scaled by |V \ h|.
double group_degree_normalized(const Graph& g, const VertexSubset& h);

/// (sum, average) over v outside h of min_{u in h} dist(u, v).
std::pair<double, double> group_closeness(const Graph& g, const VertexSubset& h);

/// Sum over unordered pairs {u,v} outside h of the fraction of u-v geodesics
/// passing through at least one member of h.
double group_betweenness(const Graph& g, const VertexSubset& h);

GroupCentralityRow group_centrality_row(const Graph& g, const VertexSubset& h);

}  // namespace flowcent

#endif  // FLOWCENT_CORE_GROUP_CENTRALITY_HPP_
