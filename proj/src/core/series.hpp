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

#ifndef FLOWCENT_CORE_SERIES_HPP_
#define FLOWCENT_CORE_SERIES_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "core/errors.hpp"

namespace flowcent {

/// Coefficients c[0..order] of a polynomial / truncated formal power series.
/// Instantiated exact (mpz_class) for the combinatorial identities and
/// floating for the spectral quantities.
template <typename T>
struct Series {
  std::vector<T> c;

  int order() const { return static_cast<int>(c.size()) - 1; }

  T at(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return T(0);
    return c[k];
  }

  void trim() {
    while (c.size() > 1 && c.back() == T(0)) c.pop_back();
  }

  bool operator==(const Series&) const = default;
};

using ZSeries = Series<mpz_class>;
using DSeries = Series<double>;

/// First L+1 coefficients of 1/p via the convolution recurrence
/// sum_i p[i] * h[l-i] = [l == 0]. Requires p.c[0] == 1.
template <typename T>
Series<T> series_inverse(const Series<T>& p, int L) {
  if (L < 0) fail(ErrorCode::invalid_argument, "series order must be >= 0");
  if (p.c.empty() || !(p.c[0] == T(1))) {
    fail(ErrorCode::invalid_argument, "series inverse needs constant term 1");
  }
  Series<T> h;
  h.c.assign(L + 1, T(0));
  h.c[0] = T(1);
  const int deg = p.order();
  for (int l = 1; l <= L; ++l) {
    T acc(0);
    const int m = std::min(l, deg);
    for (int i = 1; i <= m; ++i) acc += p.c[i] * h.c[l - i];
    h.c[l] = -acc;
  }
  return h;
}

template <typename T>
Series<T> series_mul(const Series<T>& a, const Series<T>& b, int L) {
  Series<T> out;
  out.c.assign(L + 1, T(0));
  for (int i = 0; i <= std::min(L, a.order()); ++i) {
    if (a.c[i] == T(0)) continue;
    for (int j = 0; j <= std::min(L - i, b.order()); ++j) {
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

inline double poly_eval(const std::vector<double>& c, double z) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

inline double poly_derivative_eval(const std::vector<double>& c, double z) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

inline DSeries to_floating(const ZSeries& s) {
  DSeries d;
  d.c.reserve(s.c.size());
  for (const auto& v : s.c) d.c.push_back(v.get_d());
  return d;
}

}  // namespace flowcent

#endif  // FLOWCENT_CORE_SERIES_HPP_
