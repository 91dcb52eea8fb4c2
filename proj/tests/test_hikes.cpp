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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"

#include "core/builtin.hpp"
#include "core/centrality.hpp"
#include "core/charpoly.hpp"
#include "core/errors.hpp"
#include "core/hikes.hpp"
#include "core/rng.hpp"

using namespace flowcent;

namespace {

std::uint64_t budget() { return 1'000'000; }

int find_prime(const PrimeBasis& basis, std::vector<int> vertices) {
  int idx = basis.find(vertices);
  REQUIRE(idx >= 0);
  return idx;
}

}  // namespace

TEST_CASE("prime bases of the named graphs") {
  PrimeBasis k3(complete_graph(3), 3);
  CHECK(k3.count() == 5);

  PrimeBasis c4(cycle_graph(4), 4);
  CHECK(c4.count() == 6);

  PrimeBasis loop(self_loop_graph(), 1);
  CHECK(loop.count() == 1);

  // 2-cycles sharing a vertex do not commute; disjoint ones do.
  int e01 = find_prime(c4, {0, 1});
  int e12 = find_prime(c4, {1, 2});
  int e23 = find_prime(c4, {2, 3});
  CHECK_FALSE(c4.commute(e01, e12));
  CHECK(c4.commute(e01, e23));
}

TEST_CASE("hike counts on the dimer digraph") {
  Graph dimer = two_node_digraph();
  PrimeBasis basis(dimer, 6);
  HikeSet hikes(basis, 6, budget());
  auto counts = hikes.counts_by_length();
  std::vector<mpz_class> expected{1, 0, 1, 0, 1, 0, 1};
  CHECK(counts == expected);
}

TEST_CASE("hike counts and composition on C4 at length 4") {
  Graph c4 = cycle_graph(4);
  PrimeBasis basis(c4, 4);
  HikeSet hikes(basis, 4, budget());
  auto counts = hikes.counts_by_length();
  CHECK(counts[0] == 1);
  CHECK(counts[2] == 4);
  CHECK(counts[4] == 16);

  // 16 = 4 squared 2-cycles + 8 ordered non-commuting 2-cycle words
  //    + 2 commuting disjoint pairs + 2 orientations of the square.
  int squares = 0, ordered_pairs = 0, disjoint_pairs = 0, four_cycles = 0;
  for (const auto& h : hikes.hikes()) {
    if (h.length != 4) continue;
    if (h.omega() == 1) {
      ++four_cycles;
    } else {
      REQUIRE(h.omega() == 2);
      if (h.word[0] == h.word[1]) {
        ++squares;
      } else if (basis.commute(h.word[0], h.word[1])) {
        ++disjoint_pairs;
      } else {
        ++ordered_pairs;
      }
    }
  }
  CHECK(squares == 4);
  CHECK(ordered_pairs == 8);
  CHECK(disjoint_pairs == 2);
  CHECK(four_cycles == 2);
}

TEST_CASE("hike counts on K3") {
  PrimeBasis basis(complete_graph(3), 3);
  HikeSet hikes(basis, 2, budget());
  CHECK(hikes.counts_by_length()[2] == 3);
}

TEST_CASE("hike budget is enforced") {
  PrimeBasis basis(complete_graph(4), 4);
  CHECK_THROWS_AS(HikeSet(basis, 12, 50), Error);
}

TEST_CASE("mobius values") {
  Graph c4 = cycle_graph(4);
  PrimeBasis basis(c4, 4);
  int e01 = find_prime(basis, {0, 1});
  int e12 = find_prime(basis, {1, 2});
  int e23 = find_prime(basis, {2, 3});

  CHECK(mobius(basis, make_hike(basis, {})) == 1);
  CHECK(mobius(basis, make_hike(basis, {static_cast<std::uint16_t>(e01)})) == -1);
  CHECK(mobius(basis, make_hike(basis, {static_cast<std::uint16_t>(e01),
                                        static_cast<std::uint16_t>(e12)})) == 0);
  CHECK(mobius(basis, make_hike(basis, {static_cast<std::uint16_t>(e01),
                                        static_cast<std::uint16_t>(e23)})) == 1);
}

TEST_CASE("right prime divisors and walks") {
  Graph c4 = cycle_graph(4);
  PrimeBasis basis(c4, 4);
  auto e01 = static_cast<std::uint16_t>(find_prime(basis, {0, 1}));
  auto e12 = static_cast<std::uint16_t>(find_prime(basis, {1, 2}));
  auto e23 = static_cast<std::uint16_t>(find_prime(basis, {2, 3}));

  Hike commuting = make_hike(basis, {e01, e23});
  auto div = right_prime_divisors(basis, commuting);
  CHECK(div == std::vector<std::uint16_t>{e01, e23});
  CHECK_FALSE(is_walk(basis, commuting));

  Hike frozen = make_hike(basis, {e12, e23});
  div = right_prime_divisors(basis, frozen);
  CHECK(div == std::vector<std::uint16_t>{e23});
  CHECK(is_walk(basis, frozen));

  Hike power = make_hike(basis, {e01, e01, e01});
  div = right_prime_divisors(basis, power);
  CHECK(div == std::vector<std::uint16_t>{e01});
  CHECK(is_walk(basis, power));

  CHECK_FALSE(is_walk(basis, make_hike(basis, {})));
}

TEST_CASE("normal form: shuffles converge and canonicity agrees") {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng.below(3));
    Graph g = rng.chance(0.5) ? random_connected_undirected(n, 0.4, false, rng)
                              : random_strongly_connected_digraph(n, 0.3, true, rng);
    PrimeBasis basis(g, n);
    if (basis.count() == 0) continue;
    std::vector<std::uint16_t> word;
    int len = 2 + static_cast<int>(rng.below(5));
    for (int i = 0; i < len; ++i) {
      word.push_back(static_cast<std::uint16_t>(rng.below(basis.count())));
    }
    auto canonical = normalize_word(basis, word);
    CHECK(word_is_canonical(basis, canonical));

    // Random legal adjacent transpositions must not change the normal form.
    auto shuffled = word;
    for (int step = 0; step < 30; ++step) {
      if (shuffled.size() < 2) break;
      std::size_t i = rng.below(static_cast<std::uint32_t>(shuffled.size() - 1));
      if (basis.commute(shuffled[i], shuffled[i + 1])) {
        std::swap(shuffled[i], shuffled[i + 1]);
      }
    }
    CHECK(normalize_word(basis, shuffled) == canonical);
  }
}

TEST_CASE("length and mobius are multiplicative over disjoint hikes") {
  SplitMix64 graph_rng(52);
  Graph g = random_connected_undirected(8, 0.2, false, graph_rng);
  PrimeBasis basis(g, 8);
  SplitMix64 rng(53);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 30; ++trial) {
    // Pick a prime, then one from its commuting set; powers of each stay
    // vertex-disjoint from the other.
    auto a = static_cast<std::uint16_t>(rng.below(basis.count()));
    std::vector<std::uint16_t> partners;
    for (int b = 0; b < basis.count(); ++b) {
      if (basis.commute(a, b)) partners.push_back(static_cast<std::uint16_t>(b));
    }
    if (partners.empty()) continue;
    auto b = partners[rng.below(static_cast<std::uint32_t>(partners.size()))];
    std::vector<std::uint16_t> w1(1 + rng.below(2), a);
    std::vector<std::uint16_t> w2(1 + rng.below(2), b);
    ++done;
    Hike h1 = make_hike(basis, w1);
    Hike h2 = make_hike(basis, w2);
    std::vector<std::uint16_t> cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    Hike prod = make_hike(basis, cat);
    CHECK(prod.length == h1.length + h2.length);
    CHECK(mobius(basis, prod) == mobius(basis, h1) * mobius(basis, h2));
  }
  CHECK(done > 0);
}

TEST_CASE("sieve counts on C4 by hand") {
  Graph c4 = cycle_graph(4);
  PrimeBasis basis(c4, 4);
  HikeSet hikes(basis, 4, budget());
  int e01 = find_prime(basis, {0, 1});

  CHECK(sieve_count_bruteforce(hikes, e01, 4) == 12);
  CHECK(sieve_count_bruteforce(hikes, e01, 0) == 1);
  CHECK(sieve_count_formula(c4, basis.prime(e01), 4) == 12);
  CHECK(sieve_count_formula(c4, basis.prime(e01), 2) == 3);
  CHECK(sieve_count_formula(c4, basis.prime(e01), 0) == 1);
}

TEST_CASE("on K3 every prime intercepts everything") {
  Graph k3 = complete_graph(3);
  PrimeBasis basis(k3, 3);
  HikeSet hikes(basis, 8, budget());
  auto counts = hikes.counts_by_length();
  for (int p = 0; p < basis.count(); ++p) {
    if (basis.prime(p).length() != 2) continue;
    for (int l = 0; l <= 8; ++l) {
      CHECK(sieve_count_bruteforce(hikes, p, l) == counts[l]);
    }
  }
}

TEST_CASE("sieve brute force equals the series formula everywhere") {
  for (const auto& [name, g] : verification_graphs(4)) {
    CAPTURE(name);
    PrimeBasis basis(g, g.node_count());
    HikeSet hikes(basis, 8, budget());
    for (int p = 0; p < basis.count(); ++p) {
      for (int l = 0; l <= 8; ++l) {
        CHECK(sieve_count_bruteforce(hikes, p, l) ==
              sieve_count_formula(g, basis.prime(p), l));
      }
    }
  }
}

TEST_CASE("walk counts by hand") {
  Graph dimer = two_node_digraph();
  PrimeBasis dbasis(dimer, 2);
  HikeSet dhikes(dbasis, 6, budget());
  CHECK(walk_count_bruteforce(dhikes, 0, 6) == 1);  // the cube of the 2-cycle

  Graph c4 = cycle_graph(4);
  PrimeBasis basis(c4, 4);
  HikeSet hikes(basis, 6, budget());
  int e01 = find_prime(basis, {0, 1});
  CHECK(walk_count_bruteforce(hikes, e01, 6) == 12);
  CHECK(walk_count_bruteforce(hikes, e01, 3) == 0);
}

TEST_CASE("walk factorization is a bijection onto the sieved set") {
  for (const auto& [name, g] : verification_graphs(2)) {
    CAPTURE(name);
    PrimeBasis basis(g, g.node_count());
    const int L = 7;
    HikeSet hikes(basis, L, budget());
    for (int p = 0; p < basis.count(); ++p) {
      const int lg = basis.prime(p).length();
      for (int k = lg; k <= L; ++k) {
        const int ell = k - lg;
        // Canonical words of the sieve survivors at the cofactor length.
        std::set<std::vector<std::uint16_t>> survivors;
        const auto& all = hikes.hikes();
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (all[i].length != ell) continue;
          bool ok = true;
          for (std::uint16_t d : hikes.divisors(i)) {
            if (basis.commute(d, p)) {
              ok = false;
              break;
            }
          }
          if (ok) survivors.insert(all[i].word);
        }
        // Stripping the unique right divisor from each walk must hit each
        // survivor exactly once.
        std::set<std::vector<std::uint16_t>> stripped;
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (all[i].length != k) continue;
          const auto& div = hikes.divisors(i);
          if (div.size() != 1 || div[0] != p) continue;
          auto word = all[i].word;
          for (std::size_t pos = word.size(); pos-- > 0;) {
            if (word[pos] == static_cast<std::uint16_t>(p)) {
              word.erase(word.begin() + pos);
              break;
            }
          }
          auto norm = normalize_word(basis, word);
          CHECK(survivors.count(norm) == 1);
          CHECK(stripped.insert(norm).second);  // injective
        }
        CHECK(stripped.size() == survivors.size());
      }
    }
  }
}

TEST_CASE("mobius series reproduces the characteristic polynomial") {
  PrimeBasis k3(complete_graph(3), 3);
  CHECK(mobius_charpoly_series(k3).c == std::vector<mpz_class>{1, 0, -3, -2});

  PrimeBasis c4(cycle_graph(4), 4);
  CHECK(mobius_charpoly_series(c4).c == std::vector<mpz_class>{1, 0, -4});

  PrimeBasis lone(isolated_vertex(), 1);
  CHECK(mobius_charpoly_series(lone).c == std::vector<mpz_class>{1});

  for (const auto& [name, g] : verification_graphs(6)) {
    CAPTURE(name);
    PrimeBasis basis(g, g.node_count());
    CHECK(mobius_charpoly_series(basis).c == charpoly_exact(g).c);
  }
}

TEST_CASE("hike counts equal the zeta coefficients") {
  for (const auto& [name, g] : verification_graphs(4)) {
    CAPTURE(name);
    PrimeBasis basis(g, g.node_count());
    const int L = 10;
    HikeSet hikes(basis, L, budget());
    CHECK(hikes.counts_by_length() == zeta_exact(g, L).c);
  }
}

TEST_CASE("walk ratio on C4 is exactly 3/4 at every supported k") {
  Graph c4 = cycle_graph(4);
  Analysis a(c4);
  PrimeBasis basis(c4, 4);
  int e01 = find_prime(basis, {0, 1});
  auto diag = walk_ratio_convergence(a, basis.prime(e01), 40);
  CHECK(diag.c_gamma == doctest::Approx(0.75).epsilon(1e-15));
  int supported = 0;
  for (const auto& row : diag.rows) {
    if (row.k < 4) continue;
    CHECK(row.supported == (row.k % 2 == 0));
    if (row.supported) {
      ++supported;
      CHECK(row.ratio_shift == mpq_class(3, 4));
      // The unshifted ratio differs by lambda^len(gamma) = 4.
      CHECK(row.ratio_plain_d == doctest::Approx(0.75 / 4.0).epsilon(1e-12));
    }
  }
  CHECK(supported == 19);  // even k in [4, 40]
}

TEST_CASE("walk ratio on the dimer is exactly 1") {
  Graph dimer = two_node_digraph();
  Analysis a(dimer);
  PrimeBasis basis(dimer, 2);
  auto diag = walk_ratio_convergence(a, basis.prime(0), 30);
  for (const auto& row : diag.rows) {
    if (row.supported) CHECK(row.ratio_shift == mpq_class(1));
  }
}

TEST_CASE("walk ratio converges within 0.01 by k = 40 on aperiodic digraphs") {
  for (const auto& [name, g] : aperiodic_digraphs(4)) {
    CAPTURE(name);
    Analysis a(g);
    if (a.spectrum().multiplicity != 1) continue;
    PrimeBasis basis(g, g.node_count());
    for (int p = 0; p < basis.count(); ++p) {
      auto diag = walk_ratio_convergence(a, basis.prime(p), 40);
      CHECK(diag.final_abs_err <= 0.01);
    }
  }
}

TEST_CASE("scaling error decays tenfold between lengths 10 and 50") {
  for (const auto& [name, g] : aperiodic_digraphs(3)) {
    CAPTURE(name);
    Spectrum s = analyze_spectrum(g);
    if (s.multiplicity != 1) continue;
    ZSeries zeta = zeta_exact(g, 55);
    PrimeBasis basis(g, g.node_count());
    auto f = [&](int l) { return zeta.c[l].get_d() / std::pow(s.lambda, l); };
    // Self-avoiding hike lengths are bounded by n; take the max deviation
    // max_d |f(l - len(d)) - f(l)| over len(d) in 1..n.
    auto deviation = [&](int l) {
      double worst = 0.0;
      for (int d = 1; d <= g.node_count(); ++d) {
        worst = std::max(worst, std::abs(f(l - d) - f(l)));
      }
      return worst;
    };
    CHECK(deviation(50) <= deviation(10) / 10.0);
  }
}
