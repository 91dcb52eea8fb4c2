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

#ifndef FLOWCENT_CORE_ERRORS_HPP_
#define FLOWCENT_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace flowcent {

enum class ErrorCode {
  invalid_argument = 1,  // bad indices, malformed subsets, misuse
  parse = 2,             // malformed input text
  domain = 3,            // mathematically undefined request (zero spectrum, ...)
  budget = 4,            // enumeration budget exceeded
  io = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace flowcent

#endif  // FLOWCENT_CORE_ERRORS_HPP_
