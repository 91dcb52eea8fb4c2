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

#include "core/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

#include "core/charpoly.hpp"
#include "core/errors.hpp"

namespace flowcent {

namespace {

constexpr int kPowerIterationCap = 200000;

Eigen::MatrixXd to_eigen(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = g.weight(i, j);
  }
  return a;
}

bool zero_adjacency(const Graph& g) {
  for (double w : g.adjacency()) {
    if (w != 0.0) return false;
  }
  return true;
}

std::vector<std::complex<double>> dense_eigenvalues(const Graph& g) {
  Eigen::MatrixXd a = to_eigen(g);
  std::vector<std::complex<double>> evs;
  evs.reserve(g.node_count());
  if (!g.directed()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    for (int i = 0; i < g.node_count(); ++i) evs.emplace_back(es.eigenvalues()(i), 0.0);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    for (int i = 0; i < g.node_count(); ++i) evs.push_back(es.eigenvalues()(i));
  }
  return evs;
}

// Power iteration on A + I. The shift makes nonnegative irreducible
// matrices primitive, so periodic graphs (bipartite, directed cycles)
// still converge; the unshifted iteration would oscillate on them.
double shifted_power_iteration(const Graph& g, double tol) {
  const int n = g.node_count();
  const std::vector<double>& adj = g.adjacency();
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  double rayleigh = 0.0;
  for (int iter = 0; iter < kPowerIterationCap; ++iter) {
    for (int i = 0; i < n; ++i) {
      double acc = v[i];  // + I
      const double* row = &adj[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) acc += row[j] * v[j];
      w[i] = acc;
    }
    double dot = 0.0, norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      dot += v[i] * w[i];
      norm2 += w[i] * w[i];
    }
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) fail(ErrorCode::domain, "power iteration collapsed to zero vector");
    rayleigh = dot;
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = w[i] - rayleigh * v[i];
      residual += r * r;
      v[i] = w[i] / norm;
    }
    if (std::sqrt(residual) <= tol * std::abs(rayleigh)) return rayleigh - 1.0;
  }
  fail(ErrorCode::domain,
       "power iteration did not converge; for n > " +
           std::to_string(kDenseSpectrumLimit) +
           " periodic or defective spectra are not supported - analyze a "
           "smaller graph or its components");
}

}  // namespace

Spectrum analyze_spectrum(const Graph& g, double tol) {
  const int n = g.node_count();
  if (n == 0) fail(ErrorCode::invalid_argument, "spectrum of the empty graph");
  if (zero_adjacency(g)) {
    fail(ErrorCode::domain,
         "spectral radius is 0 (no edges): centrality undefined");
  }
  Spectrum s;
  if (!g.nonnegative()) {
    s.warnings.push_back(
        "negative edge weights: Perron-Frobenius guarantees and the c(H) in "
        "[0,1] contract do not apply");
  }
  if (n <= kDenseSpectrumLimit) {
    auto evs = dense_eigenvalues(g);
    s.moduli.reserve(evs.size());
    for (const auto& ev : evs) s.moduli.push_back(std::abs(ev));
    std::sort(s.moduli.rbegin(), s.moduli.rend());
    s.lambda = s.moduli.front();
    s.multiplicity = 0;
    for (double m : s.moduli) {
      if (s.lambda - m <= tol * s.lambda) ++s.multiplicity;
    }
    s.lambda_multiplicity = 0;
    for (const auto& ev : evs) {
      if (std::abs(ev - std::complex<double>(s.lambda, 0.0)) <= tol * s.lambda) {
        ++s.lambda_multiplicity;
      }
    }
  } else {
    s.lambda = shifted_power_iteration(g, 1e-13);
    s.multiplicity = 1;
    s.lambda_multiplicity = 1;
    if (!g.directed() && g.connected() && g.bipartite()) {
      s.multiplicity = 2;  // -lambda mirrors lambda
    } else {
      s.warnings.push_back(
          "modulus multiplicity estimated as 1 from power iteration (dense "
          "verification is limited to n <= 64)");
    }
  }
  if (s.lambda <= 0.0) {
    fail(ErrorCode::domain, "spectral radius is 0: centrality undefined");
  }
  if (n <= 300 || g.integer_weights()) {
    s.char_poly = charpoly(g, &s.warnings);
  } else {
    s.char_poly = DSeries{};  // deliberately absent; see eta(g)
  }
  return s;
}

std::pair<double, int> spectral_radius(const Graph& g, double tol) {
  Spectrum s = analyze_spectrum(g, tol);
  return {s.lambda, s.multiplicity};
}

double eta(const Graph& g, const Spectrum& s) {
  if (s.lambda_multiplicity != 1) {
    fail(ErrorCode::domain,
         "eta degenerate: the dominant eigenvalue has algebraic multiplicity " +
             std::to_string(s.lambda_multiplicity));
  }
  std::vector<double> coeffs;
  if (s.char_poly.c.empty()) {
    coeffs = charpoly(g).c;
  } else {
    coeffs = s.char_poly.c;
  }
  return -poly_derivative_eval(coeffs, 1.0 / s.lambda) / s.lambda;
}

double eta(const Graph& g) { return eta(g, analyze_spectrum(g)); }

std::vector<double> dominant_eigenvector(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) fail(ErrorCode::invalid_argument, "empty graph");
  if (zero_adjacency(g)) {
    fail(ErrorCode::domain, "spectral radius is 0: no dominant eigenvector");
  }
  const bool ok = g.directed() ? g.strongly_connected() : g.connected();
  if (!ok) {
    fail(ErrorCode::domain,
         "graph is not (strongly) connected: the dominant eigenvector is not "
         "entrywise positive - analyze components separately");
  }
  std::vector<double> v(n);
  if (!g.directed()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(g));
    for (int i = 0; i < n; ++i) v[i] = es.eigenvectors()(i, n - 1);
  } else {
    // Right Perron vector by shifted power iteration.
    const std::vector<double>& adj = g.adjacency();
    std::vector<double> w(n);
    v.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int iter = 0; iter < kPowerIterationCap; ++iter) {
      for (int i = 0; i < n; ++i) {
        double acc = v[i];
        const double* row = &adj[static_cast<std::size_t>(i) * n];
        for (int j = 0; j < n; ++j) acc += row[j] * v[j];
        w[i] = acc;
      }
      double norm2 = 0.0;
      for (double x : w) norm2 += x * x;
      const double norm = std::sqrt(norm2);
      double delta = 0.0;
      for (int i = 0; i < n; ++i) {
        double next = w[i] / norm;
        delta = std::max(delta, std::abs(next - v[i]));
        v[i] = next;
      }
      if (delta <= 1e-14) break;
    }
  }
  // Perron vectors are entrywise nonzero of one sign; fix the sign globally.
  double dominant = 0.0;
  for (double x : v) {
    if (std::abs(x) > std::abs(dominant)) dominant = x;
  }
  if (dominant < 0.0) {
    for (double& x : v) x = -x;
  }
  return v;
}

}  // namespace flowcent
