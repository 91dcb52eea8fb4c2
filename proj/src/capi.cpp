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

#include "flowcent.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "core/centrality.hpp"
#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/group_centrality.hpp"
#include "core/spectrum.hpp"
#include "core/verify.hpp"

struct fc_graph {
  flowcent::Analysis analysis;
};

namespace {

thread_local std::string t_last_error;

fc_status to_status(flowcent::ErrorCode code) {
  switch (code) {
    case flowcent::ErrorCode::invalid_argument:
      return FC_ERROR_INVALID_ARGUMENT;
    case flowcent::ErrorCode::parse:
      return FC_ERROR_PARSE;
    case flowcent::ErrorCode::domain:
      return FC_ERROR_DOMAIN;
    case flowcent::ErrorCode::budget:
      return FC_ERROR_BUDGET;
    case flowcent::ErrorCode::io:
      return FC_ERROR_IO;
  }
  return FC_ERROR_INTERNAL;
}

template <typename Fn>
fc_status guarded(Fn&& fn) {
  try {
    fn();
    return FC_OK;
  } catch (const flowcent::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return FC_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return FC_ERROR_INTERNAL;
  }
}

fc_status require(bool condition, const char* message) {
  if (condition) return FC_OK;
  t_last_error = message;
  return FC_ERROR_INVALID_ARGUMENT;
}

flowcent::VertexSubset to_subset(const fc_graph* g, const int* vertices,
                                 int count) {
  if (count < 0) flowcent::fail(flowcent::ErrorCode::invalid_argument,
                                "negative vertex count");
  if (count > 0 && vertices == nullptr) {
    flowcent::fail(flowcent::ErrorCode::invalid_argument,
                   "null vertex array with nonzero count");
  }
  return flowcent::make_subset(std::span<const int>(vertices, vertices + count),
                               g->analysis.graph().node_count());
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "1.0.0"; }

const char* fc_last_error(void) { return t_last_error.c_str(); }

fc_status fc_graph_load_edge_list(const char* text, int directed,
                                  double tolerance, fc_graph** out) {
  fc_status pre = require(text && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    flowcent::Graph g = flowcent::Graph::load_edge_list(text, directed != 0);
    double tol = tolerance > 0 ? tolerance : flowcent::kDefaultModulusTol;
    *out = new fc_graph{flowcent::Analysis(std::move(g), tol)};
  });
}

fc_status fc_graph_load_file(const char* path, int directed, double tolerance,
                             fc_graph** out) {
  fc_status pre = require(path && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      flowcent::fail(flowcent::ErrorCode::io,
                     std::string("cannot open '") + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    flowcent::Graph g = flowcent::Graph::load_edge_list(buf.str(), directed != 0);
    double tol = tolerance > 0 ? tolerance : flowcent::kDefaultModulusTol;
    *out = new fc_graph{flowcent::Analysis(std::move(g), tol)};
  });
}

void fc_graph_free(fc_graph* graph) { delete graph; }

int fc_graph_node_count(const fc_graph* graph) {
  return graph ? graph->analysis.graph().node_count() : 0;
}

int fc_graph_directed(const fc_graph* graph) {
  return graph && graph->analysis.graph().directed() ? 1 : 0;
}

const char* fc_graph_label(const fc_graph* graph, int vertex) {
  if (!graph || vertex < 0 || vertex >= graph->analysis.graph().node_count()) {
    return nullptr;
  }
  return graph->analysis.graph().label(vertex).c_str();
}

int fc_graph_find_label(const fc_graph* graph, const char* label) {
  if (!graph || !label) return -1;
  return graph->analysis.graph().find_label(label);
}

fc_status fc_graph_edge_list(const fc_graph* graph, char** out_text) {
  fc_status pre = require(graph && out_text, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    std::string text = graph->analysis.graph().to_edge_list();
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out_text = buf;
  });
}

void fc_string_free(char* text) { delete[] text; }

fc_status fc_spectrum(fc_graph* graph, fc_spectrum_info* out) {
  fc_status pre = require(graph && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    const flowcent::Spectrum& s = graph->analysis.spectrum();
    out->lambda = s.lambda;
    out->multiplicity = s.multiplicity;
    out->lambda_multiplicity = s.lambda_multiplicity;
    out->charpoly_len = static_cast<int>(s.char_poly.c.size());
    if (s.lambda_multiplicity == 1) {
      out->eta = graph->analysis.eta();
    } else {
      out->eta = std::nan("");
    }
  });
}

fc_status fc_charpoly(fc_graph* graph, double* coeffs, int cap, int* out_len) {
  fc_status pre = require(graph && out_len && (cap == 0 || coeffs),
                          "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    const flowcent::Spectrum& s = graph->analysis.spectrum();
    *out_len = static_cast<int>(s.char_poly.c.size());
    for (int i = 0; i < *out_len && i < cap; ++i) coeffs[i] = s.char_poly.c[i];
  });
}

fc_status fc_subgraph_centrality(fc_graph* graph, const int* vertices,
                                 int count, double* out) {
  fc_status pre = require(graph && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    *out = graph->analysis.centrality_value(to_subset(graph, vertices, count));
  });
}

fc_status fc_eigenvector_centrality(fc_graph* graph, double* out) {
  fc_status pre = require(graph && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    const auto& v = graph->analysis.eigenvector_centrality();
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  });
}

fc_status fc_projector_pathsum(fc_graph* graph, int i, int j, int max_len,
                               double* out) {
  fc_status pre = require(graph && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] { *out = graph->analysis.projector_pathsum(i, j, max_len); });
}

fc_status fc_union_centrality_ie(fc_graph* graph, const int* flat,
                                 const int* part_sizes, int parts,
                                 double* out) {
  fc_status pre = require(graph && out && part_sizes && parts > 0,
                          "null argument or no parts");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    std::vector<flowcent::VertexSubset> subsets;
    int offset = 0;
    for (int p = 0; p < parts; ++p) {
      subsets.push_back(to_subset(graph, flat + offset, part_sizes[p]));
      offset += part_sizes[p];
    }
    *out = graph->analysis.union_centrality_ie(subsets);
  });
}

fc_status fc_flow_overlap(fc_graph* graph, const int* vertices, int count,
                          double* out) {
  fc_status pre = require(graph && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    *out = graph->analysis.flow_overlap(to_subset(graph, vertices, count));
  });
}

fc_status fc_group_degree(fc_graph* graph, const int* vertices, int count,
                          int* out) {
  fc_status pre = require(graph && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    *out = flowcent::group_degree(graph->analysis.graph(),
                                  to_subset(graph, vertices, count));
  });
}

fc_status fc_group_closeness(fc_graph* graph, const int* vertices, int count,
                             double* out_sum, double* out_avg) {
  fc_status pre = require(graph && out_sum && out_avg, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    auto [sum, avg] = flowcent::group_closeness(graph->analysis.graph(),
                                                to_subset(graph, vertices, count));
    *out_sum = sum;
    *out_avg = avg;
  });
}

fc_status fc_group_betweenness(fc_graph* graph, const int* vertices, int count,
                               double* out) {
  fc_status pre = require(graph && out, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    *out = flowcent::group_betweenness(graph->analysis.graph(),
                                       to_subset(graph, vertices, count));
  });
}

fc_status fc_simple_cycles(fc_graph* graph, int max_len, int with_centrality,
                           fc_cycle_callback cb, void* user) {
  fc_status pre = require(graph && cb, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    auto cycles = flowcent::simple_cycles(graph->analysis.graph(), max_len);
    for (const auto& cycle : cycles) {
      double c = std::nan("");
      if (with_centrality) {
        c = graph->analysis.centrality_value(cycle.vertex_set());
      }
      if (cb(user, cycle.vertices.data(), cycle.length(), cycle.weight, c)) {
        return;
      }
    }
  });
}

fc_status fc_connected_subsets(fc_graph* graph, int k, fc_subset_callback cb,
                               void* user) {
  fc_status pre = require(graph && cb, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    flowcent::for_each_connected_subset(
        graph->analysis.graph(), k, [&](const flowcent::VertexSubset& s) {
          return cb(user, s.data(), static_cast<int>(s.size())) == 0;
        });
  });
}

fc_status fc_distribution(fc_graph* graph, int k, int workers, uint64_t budget,
                          fc_distribution_callback cb, void* user) {
  fc_status pre = require(graph && cb, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    auto rows = flowcent::centrality_distribution(graph->analysis, k, workers,
                                                  budget);
    for (const auto& row : rows) {
      fc_distribution_row out;
      out.vertices = row.subset.data();
      out.size = static_cast<int>(row.subset.size());
      out.c = row.c;
      out.c_norm = row.c_norm;
      out.group_degree = row.group_degree;
      out.group_degree_norm = row.group_degree_norm;
      out.closeness_sum = row.closeness_sum;
      out.closeness_avg = row.closeness_avg;
      out.betweenness = row.betweenness;
      if (cb(user, &out)) return;
    }
  });
}

fc_status fc_verify(fc_graph* optional_graph, const char* suite,
                    const fc_verify_options* options, fc_line_callback row_cb,
                    fc_line_callback note_cb, void* user, uint64_t* out_checks,
                    uint64_t* out_violations) {
  fc_status pre = require(suite && out_checks && out_violations, "null argument");
  if (pre != FC_OK) return pre;
  return guarded([&] {
    flowcent::VerifyOptions opt;
    if (options) {
      if (options->budget) opt.budget = options->budget;
      if (options->seed) opt.seed = options->seed;
      if (options->tolerance > 0) opt.tolerance = options->tolerance;
      if (options->max_len > 0) opt.max_len = options->max_len;
    }
    const flowcent::Graph* g =
        optional_graph ? &optional_graph->analysis.graph() : nullptr;
    auto result = flowcent::run_verify_suite(suite, g, opt);
    *out_checks = result.checks;
    *out_violations = result.violations;
    if (row_cb) {
      row_cb(user, result.csv_header.c_str());
      for (const auto& row : result.csv_rows) row_cb(user, row.c_str());
    }
    if (note_cb) {
      for (const auto& note : result.notes) note_cb(user, note.c_str());
    }
  });
}

}  // extern "C"
