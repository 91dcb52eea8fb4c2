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

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "flowcent.h"

namespace {

struct Handle {
  fc_graph* g = nullptr;
  ~Handle() { fc_graph_free(g); }
};

void load(Handle& h, const char* text, int directed = 0) {
  REQUIRE(fc_graph_load_edge_list(text, directed, 0.0, &h.g) == FC_OK);
}

}  // namespace

TEST_CASE("capi: lifecycle and labels") {
  Handle h;
  load(h, "a,b\nb,c\nc,a\n");
  CHECK(fc_graph_node_count(h.g) == 3);
  CHECK(fc_graph_directed(h.g) == 0);
  CHECK(std::string(fc_graph_label(h.g, 1)) == "b");
  CHECK(fc_graph_label(h.g, 9) == nullptr);
  CHECK(fc_graph_find_label(h.g, "c") == 2);
  CHECK(fc_graph_find_label(h.g, "zzz") == -1);
  CHECK(std::string(fc_version()).size() > 0);

  char* text = nullptr;
  REQUIRE(fc_graph_edge_list(h.g, &text) == FC_OK);
  CHECK(std::strstr(text, "a,b,1") != nullptr);
  fc_string_free(text);
}

TEST_CASE("capi: parse errors carry messages") {
  Handle h;
  CHECK(fc_graph_load_edge_list("a,b\nbroken", 0, 0.0, &h.g) == FC_ERROR_PARSE);
  CHECK(std::string(fc_last_error()).find("line 2") != std::string::npos);
  CHECK(fc_graph_load_edge_list("", 0, 0.0, &h.g) == FC_ERROR_PARSE);
  CHECK(fc_graph_load_file("/nonexistent/x.csv", 0, 0.0, &h.g) == FC_ERROR_IO);
}

TEST_CASE("capi: spectrum of K3") {
  Handle h;
  load(h, "a,b\nb,c\nc,a\n");
  fc_spectrum_info info;
  REQUIRE(fc_spectrum(h.g, &info) == FC_OK);
  CHECK(info.lambda == doctest::Approx(2.0));
  CHECK(info.multiplicity == 1);
  CHECK(info.lambda_multiplicity == 1);
  CHECK(info.eta == doctest::Approx(2.25));
  REQUIRE(info.charpoly_len == 4);
  double coeffs[4];
  int len = 0;
  REQUIRE(fc_charpoly(h.g, coeffs, 4, &len) == FC_OK);
  CHECK(len == 4);
  CHECK(coeffs[0] == doctest::Approx(1.0));
  CHECK(coeffs[2] == doctest::Approx(-3.0));
  CHECK(coeffs[3] == doctest::Approx(-2.0));
}

TEST_CASE("capi: spectrum domain error on an edgeless graph") {
  Handle h;
  load(h, "a,a,0\n");
  fc_spectrum_info info;
  CHECK(fc_spectrum(h.g, &info) == FC_ERROR_DOMAIN);
  CHECK(std::string(fc_last_error()).find("centrality undefined") !=
        std::string::npos);
}

TEST_CASE("capi: centrality and overlap") {
  Handle h;
  load(h, "a,b\nb,c\nc,a\n");
  double c = 0.0;
  int one = 0;
  REQUIRE(fc_subgraph_centrality(h.g, &one, 1, &c) == FC_OK);
  CHECK(c == doctest::Approx(0.75));
  REQUIRE(fc_subgraph_centrality(h.g, nullptr, 0, &c) == FC_OK);
  CHECK(std::abs(c) <= 1e-9);
  int all[3] = {0, 1, 2};
  REQUIRE(fc_subgraph_centrality(h.g, all, 3, &c) == FC_OK);
  CHECK(c == 1.0);

  int bad = 7;
  CHECK(fc_subgraph_centrality(h.g, &bad, 1, &c) == FC_ERROR_INVALID_ARGUMENT);

  int pair[2] = {0, 1};
  REQUIRE(fc_flow_overlap(h.g, pair, 2, &c) == FC_OK);
  CHECK(c == doctest::Approx(0.5));

  int flat[3] = {0, 1, 2};
  int sizes[2] = {2, 1};
  REQUIRE(fc_union_centrality_ie(h.g, flat, sizes, 2, &c) == FC_OK);
  CHECK(c == doctest::Approx(1.75));  // c({a,b}) + c({c}) - c(empty)
}

TEST_CASE("capi: eigenvector and projector") {
  Handle h;
  load(h, "a,b\nb,c\n");
  double eig[3];
  REQUIRE(fc_eigenvector_centrality(h.g, eig) == FC_OK);
  CHECK(eig[1] == doctest::Approx(std::sqrt(2.0) / 2.0));
  double sum = 0.0;
  REQUIRE(fc_projector_pathsum(h.g, 1, 1, -1, &sum) == FC_OK);
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("capi: group baselines") {
  Handle h;
  load(h, "a,b\nb,c\n");
  int mid = 1, degree = 0;
  REQUIRE(fc_group_degree(h.g, &mid, 1, &degree) == FC_OK);
  CHECK(degree == 2);
  double s = 0, a = 0, b = 0;
  REQUIRE(fc_group_closeness(h.g, &mid, 1, &s, &a) == FC_OK);
  CHECK(s == doctest::Approx(2.0));
  CHECK(a == doctest::Approx(1.0));
  REQUIRE(fc_group_betweenness(h.g, &mid, 1, &b) == FC_OK);
  CHECK(b == doctest::Approx(1.0));
}

TEST_CASE("capi: cycle stream with centrality and early stop") {
  Handle h;
  load(h, "a,b\nb,c\nc,a\n");
  struct Ctx {
    int rows = 0;
  } ctx;
  REQUIRE(fc_simple_cycles(
              h.g, 3, 1,
              [](void* user, const int*, int length, double weight, double c) {
                auto* x = static_cast<Ctx*>(user);
                ++x->rows;
                CHECK(weight == 1.0);
                CHECK((length == 2 || length == 3));
                CHECK(c == doctest::Approx(1.0));
                return 0;
              },
              &ctx) == FC_OK);
  CHECK(ctx.rows == 5);

  ctx.rows = 0;
  REQUIRE(fc_simple_cycles(
              h.g, 3, 0,
              [](void* user, const int*, int, double, double) {
                return ++static_cast<Ctx*>(user)->rows >= 2 ? 1 : 0;
              },
              &ctx) == FC_OK);
  CHECK(ctx.rows == 2);
}

TEST_CASE("capi: connected subsets stream") {
  Handle h;
  load(h, "a,b\nb,c\n");
  std::vector<std::vector<int>> seen;
  REQUIRE(fc_connected_subsets(
              h.g, 2,
              [](void* user, const int* verts, int size) {
                static_cast<std::vector<std::vector<int>>*>(user)->push_back(
                    std::vector<int>(verts, verts + size));
                return 0;
              },
              &seen) == FC_OK);
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == std::vector<int>{0, 1});
  CHECK(seen[1] == std::vector<int>{1, 2});
}

TEST_CASE("capi: distribution rows and budget error") {
  Handle h;
  load(h, "a,b\nb,c\nc,a\nc,d\n");
  struct Ctx {
    int rows = 0;
  } ctx;
  REQUIRE(fc_distribution(
              h.g, 2, 2, 1000,
              [](void* user, const fc_distribution_row* row) {
                ++static_cast<Ctx*>(user)->rows;
                CHECK(row->size == 2);
                CHECK(row->c >= 0.0);
                CHECK(row->c <= 1.0 + 1e-12);
                return 0;
              },
              &ctx) == FC_OK);
  CHECK(ctx.rows == 4);

  CHECK(fc_distribution(
            h.g, 2, 1, 2,
            [](void*, const fc_distribution_row*) { return 0; },
            &ctx) == FC_ERROR_BUDGET);
  CHECK(std::string(fc_last_error()).find("budget") != std::string::npos);
}

TEST_CASE("capi: verify runs a suite end to end") {
  fc_verify_options opt{};
  opt.max_len = 6;
  uint64_t checks = 0, violations = 0;
  struct Ctx {
    int lines = 0;
  } ctx;
  REQUIRE(fc_verify(nullptr, "zeta", &opt,
                    [](void* user, const char*) {
                      ++static_cast<Ctx*>(user)->lines;
                    },
                    nullptr, &ctx, &checks, &violations) == FC_OK);
  CHECK(checks > 0);
  CHECK(violations == 0);
  CHECK(ctx.lines > 1);  // header plus rows

  CHECK(fc_verify(nullptr, "no-such-suite", &opt, nullptr, nullptr, nullptr,
                  &checks, &violations) == FC_ERROR_INVALID_ARGUMENT);
}
