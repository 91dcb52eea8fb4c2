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

#ifndef FLOWCENT_CORE_CHARPOLY_HPP_
#define FLOWCENT_CORE_CHARPOLY_HPP_

#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/series.hpp"

namespace flowcent {

/// Coefficients of det(I - zA) in z by Faddeev-LeVerrier over big integers.
/// Exact; requires integer edge weights. Constant term is 1, trailing zero
/// coefficients trimmed (degree = number of nonzero eigenvalues).
ZSeries charpoly_exact(const Graph& g);

/// Floating det(I - zA). Integer graphs up to n = 64 go through the exact
/// path; mid-size graphs through floating Faddeev-LeVerrier; above n = 300
/// the coefficients are rebuilt from a dense eigendecomposition, with a
/// conditioning warning appended for n > 500.
DSeries charpoly(const Graph& g, std::vector<std::string>* warnings = nullptr);

/// First L+1 coefficients of 1/det(I - zA), matching charpoly's mode:
/// exact big-integer over integer-weighted graphs, floating otherwise.
ZSeries zeta_exact(const Graph& g, int L);
DSeries zeta_floating(const Graph& g, int L);

}  // namespace flowcent

#endif  // FLOWCENT_CORE_CHARPOLY_HPP_
