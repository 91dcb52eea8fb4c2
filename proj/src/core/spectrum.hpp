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

#ifndef FLOWCENT_CORE_SPECTRUM_HPP_
#define FLOWCENT_CORE_SPECTRUM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/series.hpp"

namespace flowcent {

inline constexpr double kDefaultModulusTol = 1e-8;
inline constexpr int kDenseSpectrumLimit = 64;

struct Spectrum {
  double lambda = 0.0;          // Perron root (max eigenvalue modulus)
  int multiplicity = 1;         // eigenvalues with modulus within tol*lambda
  int lambda_multiplicity = 1;  // eigenvalues equal to lambda itself; bipartite
                                // graphs have multiplicity 2 but this stays 1
  DSeries char_poly;            // det(I - zA); empty above the floating limit
  std::vector<double> moduli;   // eigenvalue moduli, descending (dense path)
  std::vector<std::string> warnings;
};

/// Spectral radius, modulus multiplicity and the characteristic polynomial.
/// Dense eigendecomposition up to n = 64; shifted power iteration beyond,
/// with an error if the iteration does not settle (periodic structure).
/// Zero adjacency is an error: the centrality normalisation is undefined.
Spectrum analyze_spectrum(const Graph& g, double tol = kDefaultModulusTol);

std::pair<double, int> spectral_radius(const Graph& g,
                                       double tol = kDefaultModulusTol);

/// eta = prod_{i>1} (1 - lambda_i/lambda), evaluated as
/// -(1/lambda) d/dz det(I - zA) at z = 1/lambda, so no full
/// eigendecomposition is needed for digraphs. Requires simple lambda.
double eta(const Graph& g, const Spectrum& s);
double eta(const Graph& g);

/// Entrywise-positive unit eigenvector for lambda. Requires nonnegative
/// weights and a connected graph (strongly connected when directed).
std::vector<double> dominant_eigenvector(const Graph& g);

}  // namespace flowcent

#endif  // FLOWCENT_CORE_SPECTRUM_HPP_
