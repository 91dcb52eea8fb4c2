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

#ifndef FLOWCENT_CORE_CENTRALITY_HPP_
#define FLOWCENT_CORE_CENTRALITY_HPP_

#include <mutex>
#include <optional>
#include <vector>

#include "core/enumerate.hpp"
#include "core/graph.hpp"
#include "core/spectrum.hpp"

namespace flowcent {

struct CentralityReport {
  VertexSubset subset;
  double value = 0.0;       // fraction of network flows, in [0,1] for
                            // nonnegative weights
  double lambda_used = 0.0;
};

/// Read-only evaluation context: an immutable graph plus its lazily
/// computed, cached spectrum. Definition of the measure fixes lambda as the
/// dominant eigenvalue of the whole graph, so every subset evaluation against
/// one Analysis reuses the same normalisation. Safe for concurrent use.
class Analysis {
 public:
  explicit Analysis(Graph g, double tol = kDefaultModulusTol);

  const Graph& graph() const { return g_; }
  const Spectrum& spectrum() const;
  double lambda() const { return spectrum().lambda; }
  double eta() const;

  /// c(H) = det(I - A_{G\H}/lambda). c(empty) = 0, c(V) = 1.
  CentralityReport subgraph_centrality(const VertexSubset& h) const;
  double centrality_value(const VertexSubset& h) const;

  /// c(gamma): the cycle's centrality depends only on its vertex set.
  CentralityReport cycle_centrality(const SimpleCycle& gamma) const;

  /// Perron vector entries (unit norm). Requires connectivity.
  const std::vector<double>& eigenvector_centrality() const;

  /// sum over simple paths p: i -> j of lambda^-len(p) W(p) c(p); equals
  /// eta * (P_lambda)_ij on undirected graphs with simple lambda. i == j
  /// contributes only the stationary path, i.e. c({i}).
  double projector_pathsum(int i, int j, int max_len = -1) const;

  /// Inclusion-exclusion sum over nonempty part selections S:
  /// (-1)^(|S|-1) c(intersection of S), with c(empty) = 0. At most 20 parts.
  double union_centrality_ie(const std::vector<VertexSubset>& parts) const;

  /// f(s): fraction of flows intercepted by all of s jointly, by Moebius
  /// inversion over nonempty subsets of s. f({v}) = c({v}). |s| <= 20.
  double flow_overlap(const VertexSubset& s) const;

 private:
  Graph g_;
  double tol_;
  mutable std::once_flag spectrum_once_;
  mutable std::once_flag eigvec_once_;
  mutable std::optional<Spectrum> spectrum_;
  mutable std::vector<double> eigvec_;
};

}  // namespace flowcent

#endif  // FLOWCENT_CORE_CENTRALITY_HPP_
