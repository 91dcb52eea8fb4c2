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

#ifndef FLOWCENT_CORE_BUILTIN_HPP_
#define FLOWCENT_CORE_BUILTIN_HPP_

#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/rng.hpp"

namespace flowcent {

// Small named graphs and seeded generators used by the verification
// battery and the test suites.

Graph path_graph(int n);      // P_n
Graph cycle_graph(int n);     // C_n
Graph complete_graph(int n);  // K_n
Graph star_graph(int leaves);
Graph self_loop_graph();            // one vertex, one loop
Graph two_node_digraph();           // arcs both ways
Graph isolated_vertex();            // no edges

/// Random undirected connected graph: random spanning tree plus extra edges
/// with probability extra_p. Weighted variants draw from [0.5, 2.5).
Graph random_connected_undirected(int n, double extra_p, bool weighted,
                                  SplitMix64& rng);

/// Random strongly connected digraph: random Hamiltonian cycle plus extra
/// arcs with probability extra_p; aperiodic adds one self-loop.
Graph random_strongly_connected_digraph(int n, double extra_p, bool aperiodic,
                                        SplitMix64& rng);

/// Random nonnegative-weight graph with at least one cycle (so lambda > 0).
Graph random_nonnegative_graph(int n, bool directed, SplitMix64& rng);

/// Undirected unweighted graph with exactly m distinct edges.
Graph random_graph_exact_edges(int n, int m, SplitMix64& rng);

/// The built-in verification suite: P3, K3, C4, K4 plus `seeds` random
/// strongly connected digraphs on 3..5 vertices.
std::vector<std::pair<std::string, Graph>> verification_graphs(
    int seeds, std::uint64_t seed_base = 1000);

/// Aperiodic strongly connected digraphs with simple dominant eigenvalue,
/// for the asymptotic walk-ratio checks.
std::vector<std::pair<std::string, Graph>> aperiodic_digraphs(
    int seeds, std::uint64_t seed_base = 2000);

}  // namespace flowcent

#endif  // FLOWCENT_CORE_BUILTIN_HPP_
