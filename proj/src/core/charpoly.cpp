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

#include "core/charpoly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <cstddef>

#include "core/errors.hpp"

namespace flowcent {

namespace {

constexpr int kFloatingFaddeevLimit = 300;
constexpr int kConditionWarningLimit = 500;

// det(xI - A) = sum_k a_k x^{n-k} with a_0 = 1; then det(I - zA) = sum a_k z^k.
// The divisions by k are exact over the integers.
template <typename T>
std::vector<T> faddeev_leverrier(const std::vector<T>& a, int n) {
  std::vector<T> coeffs(n + 1, T(0));
  coeffs[0] = T(1);
  if (n == 0) return coeffs;
  std::vector<T> m = a;             // M_1 = A
  std::vector<T> scratch(a.size());
  for (int k = 1; k <= n; ++k) {
    T trace(0);
    for (int i = 0; i < n; ++i) trace += m[static_cast<std::size_t>(i) * n + i];
    coeffs[k] = -trace / T(k);
    if (k == n) break;
    // M_{k+1} = A (M_k + c_k I)
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] += coeffs[k];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        T acc(0);
        for (int l = 0; l < n; ++l) {
          acc += a[static_cast<std::size_t>(i) * n + l] *
                 m[static_cast<std::size_t>(l) * n + j];
        }
        scratch[static_cast<std::size_t>(i) * n + j] = acc;
      }
    }
    m.swap(scratch);
  }
  return coeffs;
}

DSeries charpoly_from_eigenvalues(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = g.weight(i, j);
  }
  std::vector<std::complex<double>> coeffs{1.0};
  auto multiply_root = [&](std::complex<double> lambda) {
    // p(z) *= (1 - lambda z)
    coeffs.push_back(0.0);
    for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
      coeffs[i] -= lambda * coeffs[i - 1];
    }
  };
  if (!g.directed()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    for (int i = 0; i < n; ++i) multiply_root(es.eigenvalues()(i));
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    for (int i = 0; i < n; ++i) multiply_root(es.eigenvalues()(i));
  }
  DSeries out;
  out.c.reserve(coeffs.size());
  for (const auto& c : coeffs) out.c.push_back(c.real());
  return out;
}

}  // namespace

ZSeries charpoly_exact(const Graph& g) {
  if (!g.integer_weights()) {
    fail(ErrorCode::invalid_argument,
         "exact characteristic polynomial requires integer edge weights");
  }
  const int n = g.node_count();
  std::vector<mpz_class> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i) * n + j] =
          static_cast<long>(std::llround(g.weight(i, j)));
    }
  }
  ZSeries out;
  out.c = faddeev_leverrier<mpz_class>(a, n);
  out.trim();
  return out;
}

DSeries charpoly(const Graph& g, std::vector<std::string>* warnings) {
  const int n = g.node_count();
  if (g.integer_weights() && n <= 64) return to_floating(charpoly_exact(g));
  if (n <= kFloatingFaddeevLimit) {
    DSeries out;
    out.c = faddeev_leverrier<double>(g.adjacency(), n);
    out.trim();
    return out;
  }
  if (warnings && n > kConditionWarningLimit) {
    warnings->push_back(
        "characteristic polynomial at n > 500: coefficients may be "
        "ill-conditioned in floating point");
  }
  DSeries out = charpoly_from_eigenvalues(g);
  out.trim();
  return out;
}

ZSeries zeta_exact(const Graph& g, int L) {
  return series_inverse(charpoly_exact(g), L);
}

DSeries zeta_floating(const Graph& g, int L) {
  return series_inverse(charpoly(g), L);
}

}  // namespace flowcent
