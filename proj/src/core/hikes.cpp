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

#include "core/hikes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/centrality.hpp"
#include "core/charpoly.hpp"
#include "core/errors.hpp"

namespace flowcent {

namespace {

bool disjoint_sorted(const VertexSubset& a, const VertexSubset& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

void require_unweighted(const Graph& g, const char* what) {
  if (!g.unweighted()) {
    fail(ErrorCode::invalid_argument,
         std::string(what) + " requires an unweighted (0/1) graph: the counts "
                             "are cardinalities");
  }
}

}  // namespace

PrimeBasis::PrimeBasis(const Graph& g, int max_len) : g_(g), max_len_(max_len) {
  primes_ = simple_cycles(g, max_len);
  // The commutation table is dense; this module targets small graphs.
  if (primes_.size() > 4096) {
    fail(ErrorCode::budget, "prime basis too large: " +
                                std::to_string(primes_.size()) +
                                " simple cycles");
  }
  vertex_sets_.reserve(primes_.size());
  for (const auto& p : primes_) vertex_sets_.push_back(p.vertex_set());
  const std::size_t m = primes_.size();
  commute_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const char d = disjoint_sorted(vertex_sets_[a], vertex_sets_[b]) ? 1 : 0;
      commute_[a * m + b] = d;
      commute_[b * m + a] = d;
    }
  }
}

int PrimeBasis::find(const std::vector<int>& cycle_vertices) const {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (primes_[i].vertices == cycle_vertices) return static_cast<int>(i);
  }
  return -1;
}

bool word_is_canonical(const PrimeBasis& basis, std::span<const std::uint16_t> word) {
  for (std::size_t j = 1; j < word.size(); ++j) {
    for (std::size_t i = j; i-- > 0;) {
      if (!basis.commute(word[i], word[j])) break;
      if (word[i] > word[j]) return false;
    }
  }
  return true;
}

std::vector<std::uint16_t> normalize_word(const PrimeBasis& basis,
                                          std::vector<std::uint16_t> word) {
  std::vector<std::uint16_t> out;
  out.reserve(word.size());
  while (!word.empty()) {
    // Least letter whose earlier letters all commute with it.
    std::size_t pick = 0;
    bool found = false;
    for (std::size_t j = 0; j < word.size(); ++j) {
      bool movable = true;
      for (std::size_t i = 0; i < j; ++i) {
        if (!basis.commute(word[i], word[j])) {
          movable = false;
          break;
        }
      }
      if (movable && (!found || word[j] < word[pick])) {
        pick = j;
        found = true;
      }
    }
    out.push_back(word[pick]);
    word.erase(word.begin() + pick);
  }
  return out;
}

Hike make_hike(const PrimeBasis& basis, std::vector<std::uint16_t> letters) {
  Hike h;
  h.word = normalize_word(basis, std::move(letters));
  for (std::uint16_t p : h.word) h.length += basis.prime(p).length();
  return h;
}

std::vector<std::uint16_t> right_prime_divisors(const PrimeBasis& basis,
                                                const Hike& h) {
  std::vector<std::uint16_t> out;
  const auto& w = h.word;
  for (std::size_t j = 0; j < w.size(); ++j) {
    bool terminal = true;
    for (std::size_t k = j + 1; k < w.size(); ++k) {
      if (!basis.commute(w[j], w[k])) {
        terminal = false;
        break;
      }
    }
    if (terminal) out.push_back(w[j]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_walk(const PrimeBasis& basis, const Hike& h) {
  return right_prime_divisors(basis, h).size() == 1;
}

int mobius(const PrimeBasis& basis, const Hike& h) {
  const auto& w = h.word;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!basis.commute(w[i], w[j])) return 0;
    }
  }
  return h.omega() % 2 == 0 ? 1 : -1;
}

HikeSet::HikeSet(const PrimeBasis& basis, int max_len, std::uint64_t budget)
    : basis_(&basis), max_len_(max_len) {
  require_unweighted(basis.graph(), "hike enumeration");
  if (max_len < 0) fail(ErrorCode::invalid_argument, "negative hike length bound");

  // DFS over canonical words: a word is kept iff appending the next letter
  // leaves it canonical, so every trace class is produced exactly once and
  // no dedup pass is needed. Primes are (length, lex)-sorted, which lets the
  // letter loop stop at the length budget.
  const int prime_count = basis.count();
  std::vector<std::uint16_t> word;
  std::uint64_t emitted = 0;

  auto canonical_after_append = [&](std::uint16_t x) {
    for (std::size_t i = word.size(); i-- > 0;) {
      if (!basis.commute(word[i], x)) return true;
      if (word[i] > x) return false;
    }
    return true;
  };

  auto emit = [&](int length) {
    if (++emitted > budget) {
      fail(ErrorCode::budget,
           "hike budget " + std::to_string(budget) + " exceeded at length " +
               std::to_string(max_len));
    }
    Hike h;
    h.word = word;
    h.length = length;
    hikes_.push_back(std::move(h));
  };

  auto dfs = [&](auto&& self, int length) -> void {
    emit(length);
    for (int x = 0; x < prime_count; ++x) {
      const int next = length + basis.prime(x).length();
      if (next > max_len) break;  // primes sorted by length
      if (!canonical_after_append(static_cast<std::uint16_t>(x))) continue;
      word.push_back(static_cast<std::uint16_t>(x));
      self(self, next);
      word.pop_back();
    }
  };
  dfs(dfs, 0);

  std::stable_sort(hikes_.begin(), hikes_.end(),
                   [](const Hike& a, const Hike& b) {
                     if (a.length != b.length) return a.length < b.length;
                     return a.word < b.word;
                   });
  divisors_.reserve(hikes_.size());
  for (const auto& h : hikes_) divisors_.push_back(right_prime_divisors(basis, h));
}

std::vector<mpz_class> HikeSet::counts_by_length() const {
  std::vector<mpz_class> counts(max_len_ + 1, mpz_class(0));
  for (const auto& h : hikes_) counts[h.length] += 1;
  return counts;
}

mpz_class sieve_count_bruteforce(const HikeSet& hikes, int gamma, int ell) {
  const PrimeBasis& basis = hikes.basis();
  if (gamma < 0 || gamma >= basis.count()) {
    fail(ErrorCode::invalid_argument, "sieve: prime index out of range");
  }
  if (ell > hikes.max_len()) {
    fail(ErrorCode::invalid_argument, "sieve: length beyond the enumerated set");
  }
  mpz_class count = 0;
  const auto& all = hikes.hikes();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].length != ell) continue;
    bool survives = true;
    for (std::uint16_t d : hikes.divisors(i)) {
      if (basis.commute(d, gamma)) {  // divisor avoids gamma: sieved out
        survives = false;
        break;
      }
    }
    if (survives) count += 1;
  }
  return count;
}

mpz_class sieve_count_formula(const Graph& g, const SimpleCycle& gamma, int ell) {
  require_unweighted(g, "the sieve formula");
  if (ell < 0) return 0;
  ZSeries zeta = zeta_exact(g, ell);
  ZSeries deleted = charpoly_exact(g.delete_vertices(gamma.vertex_set()));
  mpz_class acc = 0;
  for (int i = 0; i <= std::min(ell, deleted.order()); ++i) {
    acc += deleted.c[i] * zeta.c[ell - i];
  }
  return acc;
}

mpz_class walk_count_bruteforce(const HikeSet& hikes, int gamma, int k) {
  const PrimeBasis& basis = hikes.basis();
  if (gamma < 0 || gamma >= basis.count()) {
    fail(ErrorCode::invalid_argument, "walk count: prime index out of range");
  }
  if (k < basis.prime(gamma).length()) return 0;
  if (k > hikes.max_len()) {
    fail(ErrorCode::invalid_argument, "walk count: length beyond the enumerated set");
  }
  mpz_class count = 0;
  const auto& all = hikes.hikes();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].length != k) continue;
    const auto& div = hikes.divisors(i);
    if (div.size() == 1 && div[0] == gamma) count += 1;
  }
  return count;
}

ZSeries mobius_charpoly_series(const PrimeBasis& basis) {
  const int n = basis.graph().node_count();
  ZSeries out;
  out.c.assign(n + 1, mpz_class(0));
  out.c[0] = 1;  // identity hike
  // Self-avoiding hikes are sets of pairwise disjoint primes; enumerate by
  // ascending letter index.
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int first, int length, int omega) -> void {
    for (int p = first; p < basis.count(); ++p) {
      const int next = length + basis.prime(p).length();
      if (next > n) continue;
      bool ok = true;
      for (int q : chosen) {
        if (!basis.commute(q, p)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      out.c[next] += (omega + 1) % 2 == 0 ? 1 : -1;
      chosen.push_back(p);
      self(self, p + 1, next, omega + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0, 0);
  out.trim();
  return out;
}

WalkRatioDiagnostics walk_ratio_convergence(const Analysis& analysis,
                                            const SimpleCycle& gamma, int k_max) {
  const Graph& g = analysis.graph();
  require_unweighted(g, "walk ratio diagnostics");
  WalkRatioDiagnostics diag;
  diag.gamma = gamma;
  diag.lambda = analysis.lambda();
  diag.multiplicity = analysis.spectrum().multiplicity;
  diag.c_gamma = analysis.centrality_value(gamma.vertex_set());

  const int lg = gamma.length();
  if (k_max < lg) fail(ErrorCode::invalid_argument, "k_max below the cycle length");
  diag.prob_estimate = std::pow(diag.lambda, -lg);
  ZSeries zeta = zeta_exact(g, k_max);
  ZSeries deleted = charpoly_exact(g.delete_vertices(gamma.vertex_set()));

  const double big_lambda =
      std::pow(diag.lambda, static_cast<double>(diag.multiplicity));
  diag.f_values.reserve(k_max + 1);
  for (int l = 0; l <= k_max; ++l) {
    diag.f_values.push_back(zeta.c[l].get_d() / std::pow(big_lambda, l));
  }

  for (int k = lg; k <= k_max; ++k) {
    WalkRatioRow row;
    row.k = k;
    const int ell = k - lg;
    for (int i = 0; i <= std::min(ell, deleted.order()); ++i) {
      row.walk_count += deleted.c[i] * zeta.c[ell - i];
    }
    row.zeta_shift = zeta.c[ell];
    row.zeta_plain = zeta.c[k];
    row.supported = row.zeta_shift != 0;
    if (row.supported) {
      row.ratio_shift = mpq_class(row.walk_count, row.zeta_shift);
      row.ratio_shift.canonicalize();
      row.ratio_shift_d = row.ratio_shift.get_d();
      row.residual = row.ratio_shift_d - diag.c_gamma;
      diag.final_abs_err = std::abs(row.residual);
    }
    if (row.zeta_plain != 0) {
      mpq_class plain(row.walk_count, row.zeta_plain);
      plain.canonicalize();
      row.ratio_plain_d = plain.get_d();
    }
    diag.rows.push_back(std::move(row));
  }
  return diag;
}

}  // namespace flowcent
