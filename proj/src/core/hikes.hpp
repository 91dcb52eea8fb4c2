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

#ifndef FLOWCENT_CORE_HIKES_HPP_
#define FLOWCENT_CORE_HIKES_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "core/enumerate.hpp"
#include "core/graph.hpp"
#include "core/series.hpp"

namespace flowcent {

class Analysis;

// Exact verification laboratory for the walk algebra: hikes are
// equivalence classes of words over the alphabet of simple cycles
// ("primes"), where adjacent letters commute iff vertex-disjoint. Hikes
// play the role of integers, vertex-disjoint collections are the
// square-free elements, and walks are the hikes with a unique right prime
// divisor. Everything here is exact (big integer): the identities under
// test are coefficient-exact claims.

/// The alphabet: all simple cycles of a graph up to max_len, in canonical
/// (length, lex) order, plus the pairwise vertex-disjointness table.
/// Owns a copy of the graph (they are small here), so the basis has no
/// lifetime ties.
class PrimeBasis {
 public:
  PrimeBasis(const Graph& g, int max_len);

  const Graph& graph() const { return g_; }
  int max_len() const { return max_len_; }
  int count() const { return static_cast<int>(primes_.size()); }
  const SimpleCycle& prime(int i) const { return primes_[i]; }
  const VertexSubset& vertex_set(int i) const { return vertex_sets_[i]; }

  /// Letters commute iff their cycles share no vertex.
  bool commute(int a, int b) const {
    return commute_[static_cast<std::size_t>(a) * primes_.size() + b] != 0;
  }

  /// Index of the prime with this canonical vertex sequence, or -1.
  int find(const std::vector<int>& cycle_vertices) const;

 private:
  Graph g_;
  int max_len_;
  std::vector<SimpleCycle> primes_;
  std::vector<VertexSubset> vertex_sets_;
  std::vector<char> commute_;
};

/// A hike in normal form: the lexicographically least word of its trace
/// class. length is the total arc count, omega the letter count.
struct Hike {
  std::vector<std::uint16_t> word;
  int length = 0;

  int omega() const { return static_cast<int>(word.size()); }
  bool identity() const { return word.empty(); }
};

/// True iff no letter can be commuted in front of a strictly greater letter,
/// i.e. the word is the least representative of its class.
bool word_is_canonical(const PrimeBasis& basis, std::span<const std::uint16_t> word);

/// Normal form by repeated extraction of the least available letter.
std::vector<std::uint16_t> normalize_word(const PrimeBasis& basis,
                                          std::vector<std::uint16_t> word);

Hike make_hike(const PrimeBasis& basis, std::vector<std::uint16_t> letters);

/// Letters that can terminate some representative word: the last occurrence
/// of p qualifies iff everything after it commutes with p.
std::vector<std::uint16_t> right_prime_divisors(const PrimeBasis& basis,
                                                const Hike& h);

/// A hike is a walk iff it has exactly one right prime divisor.
bool is_walk(const PrimeBasis& basis, const Hike& h);

/// 0 unless the letters are pairwise vertex-disjoint (self-avoiding), else
/// (-1)^omega. mobius(identity) = 1.
int mobius(const PrimeBasis& basis, const Hike& h);

/// Every hike of length <= max_len, each class once, sorted by
/// (length, word). Throws ErrorCode::budget past `budget` hikes.
/// Keeps a reference to the basis, which must outlive the set.
class HikeSet {
 public:
  HikeSet(const PrimeBasis& basis, int max_len, std::uint64_t budget);

  const PrimeBasis& basis() const { return *basis_; }
  int max_len() const { return max_len_; }
  const std::vector<Hike>& hikes() const { return hikes_; }
  /// [|H_0|, ..., |H_max_len|]
  std::vector<mpz_class> counts_by_length() const;
  /// Right prime divisors, cached per hike (same indexing as hikes()).
  const std::vector<std::uint16_t>& divisors(std::size_t i) const {
    return divisors_[i];
  }

 private:
  const PrimeBasis* basis_;
  int max_len_;
  std::vector<Hike> hikes_;
  std::vector<std::vector<std::uint16_t>> divisors_;
};

/// Hikes of length ell none of whose right prime divisors is vertex-disjoint
/// from prime gamma; exactly the h for which h*gamma is a walk.
mpz_class sieve_count_bruteforce(const HikeSet& hikes, int gamma, int ell);

/// The same count through the generating-function identity:
/// [z^ell] det(I - z A_{G\gamma}) / det(I - z A_G), exact coefficients.
mpz_class sieve_count_formula(const Graph& g, const SimpleCycle& gamma, int ell);

/// Walks of length k whose unique right prime divisor is gamma. Matches
/// sieve_count_bruteforce(gamma, k - len(gamma)).
mpz_class walk_count_bruteforce(const HikeSet& hikes, int gamma, int k);

/// sum over self-avoiding hikes d of mobius(d) z^len(d); coefficientwise
/// equal to det(I - zA).
ZSeries mobius_charpoly_series(const PrimeBasis& basis);

struct WalkRatioRow {
  int k = 0;
  mpz_class walk_count;   // n_gamma(k), exact
  mpz_class zeta_shift;   // zeta[k - len(gamma)]
  mpz_class zeta_plain;   // zeta[k]
  mpq_class ratio_shift;  // n_gamma(k) / zeta[k - len(gamma)]
  double ratio_shift_d = 0.0;
  double ratio_plain_d = 0.0;  // n_gamma(k) / zeta[k]
  double residual = 0.0;       // ratio_shift - c(gamma), the error term
  bool supported = false;      // zeta[k - len(gamma)] != 0
};

struct WalkRatioDiagnostics {
  SimpleCycle gamma;
  double c_gamma = 0.0;
  double lambda = 0.0;
  int multiplicity = 1;
  double prob_estimate = 0.0;          // lambda^-len(gamma) divisibility model
  std::vector<WalkRatioRow> rows;      // k = len(gamma) .. k_max
  std::vector<double> f_values;        // zeta[l] / Lambda^l, Lambda = lambda^g
  double final_abs_err = 0.0;          // last supported |ratio - c(gamma)|
};

/// Exact-series convergence data for the fraction of length-k walks whose
/// right prime divisor is gamma. The ratio against the shifted coefficient
/// converges to c(gamma); the unshifted variant is reported alongside.
WalkRatioDiagnostics walk_ratio_convergence(const Analysis& analysis,
                                            const SimpleCycle& gamma, int k_max);

}  // namespace flowcent

#endif  // FLOWCENT_CORE_HIKES_HPP_
