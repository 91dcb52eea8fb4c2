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

#ifndef FLOWCENT_CORE_MATRIX_HPP_
#define FLOWCENT_CORE_MATRIX_HPP_

#include <vector>

#include "core/graph.hpp"

namespace flowcent {

/// Determinant by LU with partial pivoting, in place. a is row-major n*n.
/// The 0x0 determinant is 1 (empty product); singular matrices yield 0.
double lu_determinant(std::vector<double>& a, int n);

/// Fills `out` with the dense matrix I - A_{G\removed} * inv_lambda and
/// returns its dimension m = n - |removed|. `removed` must be sorted.
/// `scratch` holds the surviving vertex ids between calls (hot path reuse).
int build_centrality_matrix(const Graph& g, const VertexSubset& removed,
                            double inv_lambda, std::vector<double>& out,
                            std::vector<int>& scratch);

}  // namespace flowcent

#endif  // FLOWCENT_CORE_MATRIX_HPP_
