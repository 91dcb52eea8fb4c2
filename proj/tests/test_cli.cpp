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

// End-to-end checks of the installed command surface; the binary path
// comes from the FLOWCENT_CLI environment variable set by CTest.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

std::string cli() {
  const char* path = std::getenv("FLOWCENT_CLI");
  REQUIRE_MESSAGE(path != nullptr, "FLOWCENT_CLI not set");
  return path;
}

RunResult run(const std::string& args) {
  RunResult result;
  std::string cmd = cli() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
    result.output.append(buf, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/flowcent_cli_test_" + name;
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << content;
  return path;
}

}  // namespace

namespace {

// Value of a `key,value` line in command output; NaN when absent.
double field(const std::string& output, const std::string& key) {
  std::size_t at = output.find(key + ",");
  if (at == std::string::npos) return std::nan("");
  return std::strtod(output.c_str() + at + key.size() + 1, nullptr);
}

}  // namespace

TEST_CASE("cli: spectrum output") {
  std::string graph = write_temp("k3.csv", "a,b\nb,c\nc,a\n");
  RunResult r = run("spectrum --input " + graph);
  CHECK(r.exit_code == 0);
  CHECK(field(r.output, "lambda") == doctest::Approx(2.0));
  CHECK(r.output.find("multiplicity,1") != std::string::npos);
  CHECK(field(r.output, "eta") == doctest::Approx(2.25));
  CHECK(r.output.find("charpoly,1;0;-3;-2") != std::string::npos);
}

TEST_CASE("cli: spectrum rejects an edgeless graph with a data error") {
  std::string graph = write_temp("lonely.csv", "a,a,0\n");
  RunResult r = run("spectrum --input " + graph);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("centrality undefined") != std::string::npos);
}

TEST_CASE("cli: centrality rows") {
  std::string graph = write_temp("p3.csv", "a,b\nb,c\n");
  std::string subsets = write_temp("subsets.txt", "b\na,c\n");
  RunResult r = run("centrality --input " + graph + " --subsets " + subsets);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("labels,c,c_percent,group_degree,closeness_sum,"
                      "closeness_avg,betweenness") != std::string::npos);
  CHECK(r.output.find("b,1,100.00,2,") != std::string::npos);  // c({b}) = 1
  CHECK(r.output.find("a;c,1,100.00,1,") != std::string::npos);
}

TEST_CASE("cli: unknown label is named in the error") {
  std::string graph = write_temp("p3b.csv", "a,b\nb,c\n");
  std::string subsets = write_temp("bad_subsets.txt", "a,zzz\n");
  RunResult r = run("centrality --input " + graph + " --subsets " + subsets);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("zzz") != std::string::npos);
}

TEST_CASE("cli: missing input file") {
  RunResult r = run("spectrum --input /nonexistent/graph.csv");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: usage errors exit 1") {
  CHECK(run("").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("verify").exit_code == 1);  // --suite is required
}

TEST_CASE("cli: distribution output is byte-identical across worker counts") {
  std::string graph = write_temp(
      "grid.csv", "a,b\nb,c\nc,d\nd,a\na,e\ne,f\nf,b\nc,g\ng,h\nh,d\n");
  RunResult one = run("distribution --input " + graph + " --k 3 --workers 1");
  RunResult four = run("distribution --input " + graph + " --k 3 --workers 4");
  CHECK(one.exit_code == 0);
  CHECK(one.output == four.output);
  CHECK(one.output.find("labels,c,c_norm,group_degree,group_degree_norm") !=
        std::string::npos);
}

TEST_CASE("cli: cycles ranked by centrality") {
  std::string graph = write_temp("c4.csv", "a,b\nb,c\nc,d\nd,a\n");
  RunResult r = run("cycles --input " + graph);
  CHECK(r.exit_code == 0);
  // The full square (c = 1) outranks the edges (c = 0.75).
  std::size_t square = r.output.find("a;b;c;d,4,1");
  std::size_t edge = r.output.find("a;b,2,0.75");
  CHECK(square != std::string::npos);
  CHECK(edge != std::string::npos);
  CHECK(square < edge);
}

TEST_CASE("cli: verify zeta passes") {
  RunResult r = run("verify --suite zeta --max-len 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("violations=0") != std::string::npos);
  CHECK(r.output.find("# suite=zeta seed=42") != std::string::npos);
}

TEST_CASE("cli: verify sieve on a user graph") {
  std::string graph = write_temp("user.csv", "a,b\nb,c\nc,a\n");
  RunResult r = run("verify --suite sieve --max-len 6 --input " + graph);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("user,") != std::string::npos);
}

TEST_CASE("cli: verify inclusion-exclusion documents the failing identity") {
  // Disjoint-part additivity does not hold in general; the suite asserts it
  // and honestly exits 3 with the discrepancy rows in the report.
  RunResult r = run("verify --suite inclusion-exclusion");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("violation") != std::string::npos);
}

TEST_CASE("cli: unknown suite exits with a data error") {
  RunResult r = run("verify --suite nonsense");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("unknown verification suite") != std::string::npos);
}
