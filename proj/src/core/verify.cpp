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

#include "core/verify.hpp"

#include <algorithm>
#include <cmath>

#include "core/builtin.hpp"
#include "core/centrality.hpp"
#include "core/charpoly.hpp"
#include "core/errors.hpp"
#include "core/hikes.hpp"
#include "core/rng.hpp"
#include "core/spectrum.hpp"
#include "core/text.hpp"

namespace flowcent {

namespace {

using NamedGraph = std::pair<std::string, Graph>;

std::vector<NamedGraph> exact_battery(const VerifyOptions& opt,
                                      const Graph* user_graph,
                                      VerifySuiteResult& result) {
  auto graphs = verification_graphs(10, 1000 + opt.seed);
  if (user_graph) {
    if (user_graph->unweighted()) {
      graphs.emplace_back("user", *user_graph);
    } else {
      result.notes.push_back(
          "user graph skipped: exact identities need an unweighted graph");
    }
  }
  return graphs;
}

void run_zeta(const VerifyOptions& opt, const Graph* user_graph,
              VerifySuiteResult& result) {
  result.csv_header = "graph,ell,hike_count,zeta_coefficient,ok";
  for (const auto& [name, g] : exact_battery(opt, user_graph, result)) {
    PrimeBasis basis(g, opt.max_len);
    HikeSet hikes(basis, opt.max_len, opt.budget);
    auto counts = hikes.counts_by_length();
    ZSeries zeta = zeta_exact(g, opt.max_len);
    for (int l = 0; l <= opt.max_len; ++l) {
      const bool ok = counts[l] == zeta.c[l];
      ++result.checks;
      if (!ok) ++result.violations;
      result.csv_rows.push_back(name + "," + std::to_string(l) + "," +
                                counts[l].get_str() + "," + zeta.c[l].get_str() +
                                "," + (ok ? "1" : "0"));
    }
  }
}

void run_sieve(const VerifyOptions& opt, const Graph* user_graph,
               VerifySuiteResult& result) {
  result.csv_header = "graph,gamma,ell,brute,formula,ratio,c_gamma";
  for (const auto& [name, g] : exact_battery(opt, user_graph, result)) {
    PrimeBasis basis(g, opt.max_len);
    HikeSet hikes(basis, opt.max_len, opt.budget);
    ZSeries zeta = zeta_exact(g, opt.max_len);
    Analysis analysis(g);
    for (int p = 0; p < basis.count(); ++p) {
      const double c_gamma =
          analysis.centrality_value(basis.prime(p).vertex_set());
      for (int l = 0; l <= opt.max_len; ++l) {
        mpz_class brute = sieve_count_bruteforce(hikes, p, l);
        mpz_class formula = sieve_count_formula(g, basis.prime(p), l);
        const bool ok = brute == formula;
        ++result.checks;
        if (!ok) ++result.violations;
        double ratio = zeta.c[l] != 0
                           ? mpq_class(brute, zeta.c[l]).get_d()
                           : std::nan("");
        result.csv_rows.push_back(
            name + "," + join_vertex_sequence(g, basis.prime(p).vertices) +
            "," + std::to_string(l) + "," + brute.get_str() + "," +
            formula.get_str() + "," + fmt_double(ratio) + "," +
            fmt_double(c_gamma));
      }
    }
  }
}

void run_mobius(const VerifyOptions& opt, const Graph* user_graph,
                VerifySuiteResult& result) {
  result.csv_header = "graph,k,mobius_sum,charpoly,ok";
  for (const auto& [name, g] : exact_battery(opt, user_graph, result)) {
    PrimeBasis basis(g, g.node_count());
    ZSeries lhs = mobius_charpoly_series(basis);
    ZSeries rhs = charpoly_exact(g);
    const int top = std::max(lhs.order(), rhs.order());
    for (int k = 0; k <= top; ++k) {
      const bool ok = lhs.at(k) == rhs.at(k);
      ++result.checks;
      if (!ok) ++result.violations;
      result.csv_rows.push_back(name + "," + std::to_string(k) + "," +
                                lhs.at(k).get_str() + "," + rhs.at(k).get_str() +
                                "," + (ok ? "1" : "0"));
    }
  }
}

void run_theorem1(const VerifyOptions& opt, const Graph* user_graph,
                  VerifySuiteResult& result) {
  result.csv_header =
      "graph,gamma,k,walks,zeta_shifted,ratio,ratio_unshifted,c_gamma,abs_err";
  const double tol = opt.tolerance > 0 ? opt.tolerance : 0.01;
  const int k_max = 40;

  struct Target {
    std::string name;
    Graph g;
    bool exact;  // ratio must equal c(gamma) exactly on supported k
  };
  std::vector<Target> targets;
  targets.push_back({"C4", cycle_graph(4), true});
  targets.push_back({"dimer", two_node_digraph(), true});
  for (auto& [name, g] : aperiodic_digraphs(3, 2000 + opt.seed)) {
    targets.push_back({name, g, false});
  }
  if (user_graph) {
    if (user_graph->unweighted() && user_graph->strongly_connected()) {
      targets.push_back({"user", *user_graph, false});
    } else {
      result.notes.push_back(
          "user graph skipped: walk asymptotics need an unweighted strongly "
          "connected graph");
    }
  }

  for (const auto& target : targets) {
    const Graph& g = target.g;
    Analysis analysis(g);
    PrimeBasis basis(g, g.node_count());
    for (int p = 0; p < basis.count(); ++p) {
      auto diag = walk_ratio_convergence(analysis, basis.prime(p), k_max);
      mpq_class c_exact;  // only meaningful for the exact targets
      bool have_exact = false;
      if (target.exact) {
        // Hand-derived values: deleting a 2-cycle from C4 leaves one edge
        // (c = 3/4 under lambda = 2); deleting a 4-cycle or the dimer's
        // 2-cycle empties the graph (c = 1).
        if (target.name == "C4" && diag.gamma.length() == 2) {
          c_exact = mpq_class(3, 4);
        } else {
          c_exact = mpq_class(1);
        }
        have_exact = true;
      }
      for (const auto& row : diag.rows) {
        if (!row.supported) continue;
        const double err = std::abs(row.ratio_shift_d - diag.c_gamma);
        bool ok = true;
        if (have_exact && row.k >= 4) {
          ok = row.ratio_shift == c_exact;
          ++result.checks;
          if (!ok) ++result.violations;
        }
        result.csv_rows.push_back(
            target.name + "," +
            join_vertex_sequence(g, diag.gamma.vertices) + "," +
            std::to_string(row.k) + "," + row.walk_count.get_str() + "," +
            row.zeta_shift.get_str() + "," + fmt_double(row.ratio_shift_d) +
            "," + fmt_double(row.ratio_plain_d) + "," +
            fmt_double(diag.c_gamma) + "," + fmt_double(err));
      }
      if (!target.exact) {
        ++result.checks;
        if (!(diag.final_abs_err <= tol)) ++result.violations;
      }
    }
  }
}

void run_projector(const VerifyOptions& opt, const Graph* user_graph,
                   VerifySuiteResult& result) {
  result.csv_header = "graph,i,j,path_sum,eta_projector,abs_err,ok";
  const double tol = opt.tolerance > 0 ? opt.tolerance : 1e-6;

  std::vector<NamedGraph> graphs;
  graphs.emplace_back("P3", path_graph(3));
  graphs.emplace_back("K3", complete_graph(3));
  for (int s = 1; s <= 3; ++s) {
    SplitMix64 rng(3000 + opt.seed + s);
    int n = 4 + static_cast<int>(rng.below(4));  // 4..7
    graphs.emplace_back("und-s" + std::to_string(s),
                        random_connected_undirected(n, 0.3, false, rng));
    graphs.emplace_back("wgt-s" + std::to_string(s),
                        random_connected_undirected(n, 0.3, true, rng));
  }
  if (user_graph) {
    if (!user_graph->directed() && user_graph->connected()) {
      graphs.emplace_back("user", *user_graph);
    } else {
      result.notes.push_back(
          "user graph skipped: the projector relation needs a connected "
          "undirected graph");
    }
  }

  for (const auto& [name, g] : graphs) {
    Analysis analysis(g);
    const double et = analysis.eta();
    const auto& eig = analysis.eigenvector_centrality();
    const int n = g.node_count();
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double lhs = analysis.projector_pathsum(i, j);
        const double rhs = et * eig[i] * eig[j];
        const double err = std::abs(lhs - rhs);
        const bool ok = err <= tol;
        ++result.checks;
        if (!ok) ++result.violations;
        result.csv_rows.push_back(name + "," + g.label(i) + "," + g.label(j) +
                                  "," + fmt_double(lhs) + "," + fmt_double(rhs) +
                                  "," + fmt_double(err) + "," + (ok ? "1" : "0"));
      }
    }
  }
}

// Connected parts of size 1..3 drawn at random; returns sorted subsets.
VertexSubset random_connected_part(const Graph& g, SplitMix64& rng) {
  const int n = g.node_count();
  VertexSubset part{static_cast<int>(rng.below(n))};
  const int want = 1 + static_cast<int>(rng.below(3));
  while (static_cast<int>(part.size()) < want) {
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
      if (std::find(part.begin(), part.end(), v) != part.end()) continue;
      for (int u : part) {
        if (g.has_arc(u, v) || g.has_arc(v, u)) {
          frontier.push_back(v);
          break;
        }
      }
    }
    if (frontier.empty()) break;
    part.push_back(frontier[rng.below(static_cast<std::uint32_t>(frontier.size()))]);
  }
  std::sort(part.begin(), part.end());
  return part;
}

void run_inclusion_exclusion(const VerifyOptions& opt, const Graph* user_graph,
                             VerifySuiteResult& result) {
  result.csv_header =
      "graph,parts,ie_value,direct_value,abs_err,disjoint,status";
  const double tol = opt.tolerance > 0 ? opt.tolerance : 1e-9;

  std::vector<NamedGraph> graphs;
  graphs.emplace_back("P3", path_graph(3));
  graphs.emplace_back("K3", complete_graph(3));
  graphs.emplace_back("P4", path_graph(4));
  for (int s = 1; s <= 4; ++s) {
    SplitMix64 rng(4000 + opt.seed + s);
    int n = 4 + static_cast<int>(rng.below(4));
    graphs.emplace_back("und-s" + std::to_string(s),
                        random_connected_undirected(n, 0.35, false, rng));
  }
  if (user_graph) graphs.emplace_back("user", *user_graph);

  SplitMix64 rng(5000 + opt.seed);
  for (const auto& [name, g] : graphs) {
    Analysis analysis(g);
    for (int trial = 0; trial < 12; ++trial) {
      VertexSubset a = random_connected_part(g, rng);
      VertexSubset b = random_connected_part(g, rng);
      VertexSubset overlap;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(overlap));
      if (a == b) continue;
      std::vector<VertexSubset> parts{a, b};
      const double ie = analysis.union_centrality_ie(parts);
      VertexSubset uni;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(uni));
      const double direct = analysis.centrality_value(uni);
      const double err = std::abs(ie - direct);
      const bool disjoint = overlap.empty();
      std::string status;
      if (disjoint) {
        // Asserted for pairwise-disjoint parts; failures count.
        const bool ok = err <= tol;
        ++result.checks;
        if (!ok) ++result.violations;
        status = ok ? "ok" : "violation";
      } else {
        // Overlapping parts: the identity is unreliable; record only.
        status = err <= tol ? "ok-recorded" : "recorded";
        if (err > tol) {
          result.notes.push_back("overlap discrepancy on " + name + " parts " +
                                 join_labels(g, a) + "|" + join_labels(g, b) +
                                 ": |ie-direct| = " + fmt_double(err));
        }
      }
      result.csv_rows.push_back(name + "," + join_labels(g, a) + "|" +
                                join_labels(g, b) + "," + fmt_double(ie) + "," +
                                fmt_double(direct) + "," + fmt_double(err) +
                                "," + (disjoint ? "1" : "0") + "," + status);
    }
  }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "zeta", "sieve", "theorem1", "mobius", "projector", "inclusion-exclusion"};
  return names;
}

VerifySuiteResult run_verify_suite(const std::string& suite,
                                   const Graph* user_graph,
                                   const VerifyOptions& options) {
  VerifySuiteResult result;
  result.suite = suite;
  if (suite == "zeta") {
    run_zeta(options, user_graph, result);
  } else if (suite == "sieve") {
    run_sieve(options, user_graph, result);
  } else if (suite == "mobius") {
    run_mobius(options, user_graph, result);
  } else if (suite == "theorem1") {
    run_theorem1(options, user_graph, result);
  } else if (suite == "projector") {
    run_projector(options, user_graph, result);
  } else if (suite == "inclusion-exclusion") {
    run_inclusion_exclusion(options, user_graph, result);
  } else {
    fail(ErrorCode::invalid_argument,
         "unknown verification suite '" + suite +
             "' (available: zeta, sieve, theorem1, mobius, projector, "
             "inclusion-exclusion)");
  }
  return result;
}

}  // namespace flowcent
