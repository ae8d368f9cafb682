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

#ifndef IODG_ANALYSIS_HPP_
#define IODG_ANALYSIS_HPP_

#include <string_view>
#include <vector>

#include "iodg/graph.hpp"

namespace iodg {

/// Input->output path coverage, strongest applicable label:
///   Non       no input reaches any output
///   Partially at least one input reaches some output
///   Very      every input reaches some output
///   Fully     every input reaches every output
/// Fully implies Very implies Partially; the enum ordering encodes that
/// chain, and classifiers return the single strongest level.
enum class InformativenessLevel { Non, Partially, Very, Fully };

/// Output-side mirror: Very means every output is reached from some input.
/// Non, Partially, and Fully coincide with the informativeness levels.
enum class ActionabilityLevel { Non, Partially, Very, Fully };

std::string_view to_string(InformativenessLevel level);
std::string_view to_string(ActionabilityLevel level);
InformativenessLevel informativeness_from_string(std::string_view s);

/// One forward sweep per input; O(|I| * (|N| + |E|)).
InformativenessLevel informativeness(const IODGraph& graph);

/// One backward sweep per output.
ActionabilityLevel actionability(const IODGraph& graph);

struct DanglingReport {
  bool satisfied = false;
  std::vector<int> dangling;  // intermediates off every input->output path
};

/// Dangling nodes are the intermediates outside
/// reachable_from(I) intersect reaches(O). Graphs without intermediates are
/// vacuously satisfied.
DanglingReport no_dangling_nodes(const IODGraph& graph);

}  // namespace iodg

#endif  // IODG_ANALYSIS_HPP_
