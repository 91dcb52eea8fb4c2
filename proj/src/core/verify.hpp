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

#ifndef FLOWCENT_CORE_VERIFY_HPP_
#define FLOWCENT_CORE_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace flowcent {

struct VerifyOptions {
  std::uint64_t budget = 1'000'000;  // hike enumeration cap
  std::uint64_t seed = 42;
  double tolerance = 0.0;  // 0 = per-suite default
  int max_len = 10;        // exact-identity length bound
};

struct VerifySuiteResult {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string csv_header;
  std::vector<std::string> csv_rows;
  std::vector<std::string> notes;  // recorded (non-asserted) discrepancies
};

/// Suites: zeta, sieve, theorem1, mobius, projector, inclusion-exclusion.
/// Each runs exact or toleranced checks over the built-in graph battery,
/// plus `user_graph` when given. Violations make the CLI exit nonzero;
/// notes record known-unreliable identities without failing.
VerifySuiteResult run_verify_suite(const std::string& suite,
                                   const Graph* user_graph,
                                   const VerifyOptions& options);

const std::vector<std::string>& verify_suite_names();

}  // namespace flowcent

#endif  // FLOWCENT_CORE_VERIFY_HPP_
