// Copyright 2026 The modx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MODX_ERRORS_HPP_
#define MODX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace modx {

// Thrown when an argument violates a documented precondition. The message
// names the violated condition; the CLI maps this to exit status 2.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Thrown when a numerical procedure cannot deliver its contract
// (e.g. a bracketing search that fails to bracket).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionError(what);
}

}  // namespace modx

#endif  // MODX_ERRORS_HPP_
