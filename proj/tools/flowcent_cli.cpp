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

// Command-line front end. Links the C API only.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification
// failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flowcent.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerification = 3;

struct Options {
  std::string input;
  bool directed = false;
  std::string out;
  int workers = 1;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 42;
  double tolerance = 0.0;
  int k = 3;
  int max_len = 0;
  std::string subsets_file;
  std::string suite;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Two decimals, halves away from zero (the percent display convention).
std::string fmt_fixed2(double v) {
  double scaled = std::floor(std::abs(v) * 100.0 + 0.5) / 100.0;
  if (v < 0) scaled = -scaled;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", scaled);
  return buf;
}

[[noreturn]] void die_data(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitData);
}

void check(fc_status status) {
  if (status != FC_OK) die_data(fc_last_error());
}

struct GraphHandle {
  fc_graph* g = nullptr;
  ~GraphHandle() { fc_graph_free(g); }
};

void load_graph(const Options& opt, GraphHandle& handle) {
  if (opt.input.empty()) die_data("--input is required for this command");
  check(fc_graph_load_file(opt.input.c_str(), opt.directed ? 1 : 0,
                           opt.tolerance, &handle.g));
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) die_data("cannot write '" + opt.out + "'");
  f << text;
}

std::string join_labels(fc_graph* g, const int* vertices, int count) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (i) out += ';';
    out += fc_graph_label(g, vertices[i]);
  }
  return out;
}

// ---- spectrum ----------------------------------------------------------

int cmd_spectrum(const Options& opt) {
  GraphHandle h;
  load_graph(opt, h);
  fc_spectrum_info info;
  check(fc_spectrum(h.g, &info));
  std::vector<double> coeffs(info.charpoly_len);
  int len = 0;
  check(fc_charpoly(h.g, coeffs.data(), info.charpoly_len, &len));

  std::string text;
  text += "lambda," + fmt_double(info.lambda) + "\n";
  text += "multiplicity," + std::to_string(info.multiplicity) + "\n";
  text += "eta," + (std::isnan(info.eta) ? std::string("undefined")
                                         : fmt_double(info.eta)) + "\n";
  text += "charpoly,";
  for (int i = 0; i < len; ++i) {
    if (i) text += ';';
    text += fmt_double(coeffs[i]);
  }
  text += "\n";
  emit(opt, text);
  return kExitOk;
}

// ---- centrality --------------------------------------------------------

std::vector<int> parse_label_list(fc_graph* g, const std::string& line) {
  std::vector<int> vertices;
  std::string token;
  std::stringstream ss(line);
  while (std::getline(ss, token, ',')) {
    auto begin = token.find_first_not_of(" \t\r");
    auto end = token.find_last_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    token = token.substr(begin, end - begin + 1);
    int v = fc_graph_find_label(g, token.c_str());
    if (v < 0) die_data("unknown label '" + token + "'");
    vertices.push_back(v);
  }
  if (vertices.empty()) die_data("empty subset line: '" + line + "'");
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

int cmd_centrality(const Options& opt) {
  GraphHandle h;
  load_graph(opt, h);
  if (opt.subsets_file.empty()) die_data("--subsets is required");
  std::ifstream in(opt.subsets_file);
  if (!in) die_data("cannot open '" + opt.subsets_file + "'");

  std::string text =
      "labels,c,c_percent,group_degree,closeness_sum,closeness_avg,"
      "betweenness\n";
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<int> verts = parse_label_list(h.g, line);
    const int count = static_cast<int>(verts.size());
    double c = 0.0, sum = 0.0, avg = 0.0, betw = 0.0;
    int degree = 0;
    check(fc_subgraph_centrality(h.g, verts.data(), count, &c));
    check(fc_group_degree(h.g, verts.data(), count, &degree));
    check(fc_group_closeness(h.g, verts.data(), count, &sum, &avg));
    check(fc_group_betweenness(h.g, verts.data(), count, &betw));
    text += join_labels(h.g, verts.data(), count) + "," + fmt_double(c) + "," +
            fmt_fixed2(c * 100.0) + "," + std::to_string(degree) + "," +
            fmt_double(sum) + "," + fmt_double(avg) + "," + fmt_double(betw) +
            "\n";
  }
  emit(opt, text);
  return kExitOk;
}

// ---- distribution ------------------------------------------------------

int cmd_distribution(const Options& opt) {
  GraphHandle h;
  load_graph(opt, h);
  std::string text = "labels,c,c_norm,group_degree,group_degree_norm\n";
  struct Ctx {
    fc_graph* g;
    std::string* text;
  } ctx{h.g, &text};
  check(fc_distribution(
      h.g, opt.k, opt.workers, opt.budget,
      [](void* user, const fc_distribution_row* row) {
        auto* c = static_cast<Ctx*>(user);
        *c->text += join_labels(c->g, row->vertices, row->size) + "," +
                    fmt_double(row->c) + "," + fmt_double(row->c_norm) + "," +
                    std::to_string(row->group_degree) + "," +
                    fmt_double(row->group_degree_norm) + "\n";
        return 0;
      },
      &ctx));
  emit(opt, text);
  return kExitOk;
}

// ---- cycles ------------------------------------------------------------

int cmd_cycles(const Options& opt) {
  GraphHandle h;
  load_graph(opt, h);
  int max_len = opt.max_len > 0 ? opt.max_len : fc_graph_node_count(h.g);

  struct Row {
    std::vector<int> vertices;
    int length;
    double c;
  };
  std::vector<Row> rows;
  check(fc_simple_cycles(
      h.g, max_len, 1,
      [](void* user, const int* verts, int length, double, double c) {
        auto* v = static_cast<std::vector<Row>*>(user);
        v->push_back({std::vector<int>(verts, verts + length), length, c});
        return 0;
      },
      &rows));

  // Group by vertex set (c depends only on the set); order groups by
  // descending c with label-lexicographic tie-break.
  std::map<std::vector<int>, std::vector<const Row*>> groups;
  for (const auto& row : rows) {
    std::vector<int> key = row.vertices;
    std::sort(key.begin(), key.end());
    groups[key].push_back(&row);
  }
  struct Group {
    double c;
    std::string key_labels;
    std::vector<const Row*> rows;
  };
  std::vector<Group> ordered;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), [](const Row* a, const Row* b) {
      if (a->length != b->length) return a->length < b->length;
      return a->vertices < b->vertices;
    });
    ordered.push_back({members.front()->c,
                       join_labels(h.g, key.data(), static_cast<int>(key.size())),
                       members});
  }
  std::sort(ordered.begin(), ordered.end(), [](const Group& a, const Group& b) {
    if (a.c != b.c) return a.c > b.c;
    return a.key_labels < b.key_labels;
  });

  std::string text = "cycle,length,c\n";
  for (const auto& group : ordered) {
    for (const Row* row : group.rows) {
      text += join_labels(h.g, row->vertices.data(), row->length) + "," +
              std::to_string(row->length) + "," + fmt_double(row->c) + "\n";
    }
  }
  emit(opt, text);
  return kExitOk;
}

// ---- verify ------------------------------------------------------------

int cmd_verify(const Options& opt) {
  GraphHandle h;
  if (!opt.input.empty()) load_graph(opt, h);

  fc_verify_options vopt{};
  vopt.budget = opt.budget;
  vopt.seed = opt.seed;
  vopt.tolerance = opt.tolerance;
  vopt.max_len = opt.max_len;

  std::string text = "# suite=" + opt.suite + " seed=" +
                     std::to_string(opt.seed) + " budget=" +
                     std::to_string(opt.budget) + "\n";
  struct Ctx {
    std::string rows;
    std::string notes;
  } ctx;
  std::uint64_t checks = 0, violations = 0;
  fc_status status = fc_verify(
      h.g, opt.suite.c_str(), &vopt,
      [](void* user, const char* line) {
        static_cast<Ctx*>(user)->rows += line;
        static_cast<Ctx*>(user)->rows += '\n';
      },
      [](void* user, const char* line) {
        static_cast<Ctx*>(user)->notes += "# note: ";
        static_cast<Ctx*>(user)->notes += line;
        static_cast<Ctx*>(user)->notes += '\n';
      },
      &ctx, &checks, &violations);
  check(status);

  text += ctx.rows;
  text += ctx.notes;
  text += "# checks=" + std::to_string(checks) +
          " violations=" + std::to_string(violations) + "\n";
  emit(opt, text);
  std::cerr << "suite " << opt.suite << ": " << checks << " checks, "
            << violations << " violations\n";
  return violations == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "flowcent: determinant-based centrality of cycles and vertex groups,\n"
      "group-centrality baselines, and an exact verification battery for\n"
      "the underlying walk-algebra identities"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--input", opt.input, "edge-list file (src,dst[,weight])");
  app.add_flag("--directed", opt.directed, "treat the input as directed");
  app.add_option("--out", opt.out, "output file (default: stdout)");
  app.add_option("--workers", opt.workers, "parallel evaluation threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", opt.budget, "enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized verification runs");
  app.add_option("--tolerance", opt.tolerance,
                 "override numeric tolerances (0 = defaults)");

  auto* spectrum =
      app.add_subcommand("spectrum", "dominant eigenvalue, eta, char-poly");
  auto* centrality = app.add_subcommand(
      "centrality", "c(H) plus group baselines for listed vertex groups");
  centrality->add_option("--subsets", opt.subsets_file,
                         "file of label lists, one comma-separated per line");
  auto* distribution = app.add_subcommand(
      "distribution", "c and group degree over all connected k-subsets");
  distribution->add_option("--k", opt.k, "subset size")
      ->check(CLI::PositiveNumber);
  auto* cycles =
      app.add_subcommand("cycles", "simple cycles ranked by centrality");
  cycles->add_option("--max-len", opt.max_len, "cycle length bound");
  auto* verify = app.add_subcommand(
      "verify",
      "run a verification suite over built-in graphs (plus --input)");
  verify
      ->add_option("--suite", opt.suite,
                   "zeta: hike counts vs 1/det(I-zA); sieve: brute-force vs "
                   "series sieve counts; theorem1: walk-fraction convergence "
                   "to c(gamma); mobius: self-avoiding sum vs det(I-zA); "
                   "projector: path sums vs eta*P_lambda; "
                   "inclusion-exclusion: union identity report")
      ->required();
  verify->add_option("--max-len", opt.max_len,
                     "exact-identity length bound (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(opt);
    if (centrality->parsed()) return cmd_centrality(opt);
    if (distribution->parsed()) return cmd_distribution(opt);
    if (cycles->parsed()) return cmd_cycles(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
