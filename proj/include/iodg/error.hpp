// Copyright 2026 The iodgraph Authors.
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

#ifndef IODG_ERROR_HPP_
#define IODG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace iodg {

enum class ErrorCode {
  InvalidArgument,  // malformed call: unknown node id, bad config, ...
  Validation,       // graph fails IOD invariants where a valid graph is required
  Parse,            // unreadable graph file / JSON / DOT
  Incompatible,     // partitions are not crossover compatible
  Infeasible,       // constrained matching has no solution
  BudgetExceeded,   // enumeration or search budget exhausted
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace iodg

#endif  // IODG_ERROR_HPP_
