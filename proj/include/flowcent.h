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

/*
 * flowcent C API.
 *
 * A graph handle is immutable after loading; the dominant-eigenvalue data
 * is computed once on first use and cached inside the handle, so subset
 * evaluations against one handle share the same normalisation and may run
 * from multiple threads concurrently.
 *
 * Every fallible call returns an fc_status; on failure fc_last_error()
 * carries a thread-local description of what went wrong.
 */

#ifndef FLOWCENT_H
#define FLOWCENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_ERROR_INVALID_ARGUMENT = 1,
  FC_ERROR_PARSE = 2,
  FC_ERROR_DOMAIN = 3,
  FC_ERROR_BUDGET = 4,
  FC_ERROR_IO = 5,
  FC_ERROR_INTERNAL = 6
} fc_status;

typedef struct fc_graph fc_graph;

FC_API const char* fc_version(void);

/* Thread-local message describing the most recent failure on this thread. */
FC_API const char* fc_last_error(void);

/* ---- graph lifecycle ------------------------------------------------- */

/* Edge-list text: `src<sep>dst[<sep>weight]` per line, sep in {comma, tab,
 * space}; `#` starts a comment line; weight defaults to 1; repeated edges
 * accumulate. tolerance <= 0 selects the default (1e-8) used for
 * eigenvalue-modulus multiplicity detection. */
FC_API fc_status fc_graph_load_edge_list(const char* text, int directed,
                                         double tolerance, fc_graph** out);
FC_API fc_status fc_graph_load_file(const char* path, int directed,
                                    double tolerance, fc_graph** out);
FC_API void fc_graph_free(fc_graph* graph);

FC_API int fc_graph_node_count(const fc_graph* graph);
FC_API int fc_graph_directed(const fc_graph* graph);
/* NULL when the vertex is out of range; pointer valid for the handle's
 * lifetime. */
FC_API const char* fc_graph_label(const fc_graph* graph, int vertex);
/* -1 when no vertex carries the label. */
FC_API int fc_graph_find_label(const fc_graph* graph, const char* label);

/* Serialized edge list; free with fc_string_free. */
FC_API fc_status fc_graph_edge_list(const fc_graph* graph, char** out_text);
FC_API void fc_string_free(char* text);

/* ---- spectrum --------------------------------------------------------- */

typedef struct fc_spectrum_info {
  double lambda;            /* dominant eigenvalue (Perron root) */
  int multiplicity;         /* eigenvalue moduli tied with lambda */
  int lambda_multiplicity;  /* algebraic multiplicity of lambda itself */
  double eta;               /* prod_{i>1}(1 - lambda_i/lambda); NaN when
                             * lambda is not simple */
  int charpoly_len;         /* coefficients available via fc_charpoly */
} fc_spectrum_info;

FC_API fc_status fc_spectrum(fc_graph* graph, fc_spectrum_info* out);

/* Coefficients of det(I - zA), constant term first. Writes at most cap
 * values and reports the full length in out_len. */
FC_API fc_status fc_charpoly(fc_graph* graph, double* coeffs, int cap,
                             int* out_len);

/* ---- centrality -------------------------------------------------------- */

/* c(H) = det(I - A_{G\H}/lambda): the fraction of network flows
 * intercepted by the vertex set. count may be 0 (c = 0) or node_count
 * (c = 1). */
FC_API fc_status fc_subgraph_centrality(fc_graph* graph, const int* vertices,
                                        int count, double* out);

/* Perron vector entries; out must hold node_count doubles. */
FC_API fc_status fc_eigenvector_centrality(fc_graph* graph, double* out);

/* Sum over simple paths i -> j of lambda^-len W(p) c(p); max_len < 0 uses
 * the exact bound n-1. */
FC_API fc_status fc_projector_pathsum(fc_graph* graph, int i, int j,
                                      int max_len, double* out);

/* Inclusion-exclusion estimate of c(union of parts). `flat` concatenates
 * the parts, `part_sizes[p]` gives each length; at most 20 parts. */
FC_API fc_status fc_union_centrality_ie(fc_graph* graph, const int* flat,
                                        const int* part_sizes, int parts,
                                        double* out);

/* Fraction of flows intercepted by every vertex of the set jointly. */
FC_API fc_status fc_flow_overlap(fc_graph* graph, const int* vertices,
                                 int count, double* out);

/* ---- group-centrality baselines ---------------------------------------- */

FC_API fc_status fc_group_degree(fc_graph* graph, const int* vertices,
                                 int count, int* out);
FC_API fc_status fc_group_closeness(fc_graph* graph, const int* vertices,
                                    int count, double* out_sum,
                                    double* out_avg);
FC_API fc_status fc_group_betweenness(fc_graph* graph, const int* vertices,
                                      int count, double* out);

/* ---- enumeration ------------------------------------------------------- */

/* Callbacks return 0 to continue, nonzero to stop the stream early. */

typedef int (*fc_cycle_callback)(void* user, const int* vertices, int length,
                                 double weight, double centrality);

/* Directed simple cycles of length <= max_len in (length, lex) order.
 * centrality is filled only when with_centrality is nonzero (else NaN). */
FC_API fc_status fc_simple_cycles(fc_graph* graph, int max_len,
                                  int with_centrality, fc_cycle_callback cb,
                                  void* user);

typedef int (*fc_subset_callback)(void* user, const int* vertices, int size);

/* Connected k-subsets of the undirected skeleton, deterministic order. */
FC_API fc_status fc_connected_subsets(fc_graph* graph, int k,
                                      fc_subset_callback cb, void* user);

typedef struct fc_distribution_row {
  const int* vertices;
  int size;
  double c;
  double c_norm; /* c / max c over all rows */
  int group_degree;
  double group_degree_norm;
  double closeness_sum;
  double closeness_avg;
  double betweenness;
} fc_distribution_row;

typedef int (*fc_distribution_callback)(void* user,
                                        const fc_distribution_row* row);

/* Centrality and group baselines over every connected k-subset, sorted
 * descending by c (label-lexicographic tie-break). Evaluation fans out over
 * `workers` threads; output is byte-stable for any worker count. Fails with
 * FC_ERROR_BUDGET when the subset count exceeds budget. */
FC_API fc_status fc_distribution(fc_graph* graph, int k, int workers,
                                 uint64_t budget, fc_distribution_callback cb,
                                 void* user);

/* ---- verification ------------------------------------------------------ */

typedef struct fc_verify_options {
  uint64_t budget;  /* 0: default 1e6 enumerated hikes */
  uint64_t seed;    /* 0: default 42 */
  double tolerance; /* 0: per-suite default */
  int max_len;      /* 0: default 10 (exact-identity length bound) */
} fc_verify_options;

typedef void (*fc_line_callback)(void* user, const char* line);

/* Runs one of the suites {zeta, sieve, theorem1, mobius, projector,
 * inclusion-exclusion} over the built-in graph battery plus the optional
 * graph. row_cb receives the CSV header then one line per check; note_cb
 * (optional) receives recorded, non-asserted discrepancies. */
FC_API fc_status fc_verify(fc_graph* optional_graph, const char* suite,
                           const fc_verify_options* options,
                           fc_line_callback row_cb, fc_line_callback note_cb,
                           void* user, uint64_t* out_checks,
                           uint64_t* out_violations);

#ifdef __cplusplus
}
#endif

#endif /* FLOWCENT_H */
