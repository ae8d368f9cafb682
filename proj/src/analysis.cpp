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

#include "iodg/analysis.hpp"

#include <algorithm>

namespace iodg {

std::string_view to_string(InformativenessLevel level) {
  switch (level) {
    case InformativenessLevel::Non:
      return "non";
    case InformativenessLevel::Partially:
      return "partially";
    case InformativenessLevel::Very:
      return "very";
    case InformativenessLevel::Fully:
      return "fully";
  }
  return "non";
}

std::string_view to_string(ActionabilityLevel level) {
  return to_string(static_cast<InformativenessLevel>(level));
}

InformativenessLevel informativeness_from_string(std::string_view s) {
  if (s == "non") return InformativenessLevel::Non;
  if (s == "partially") return InformativenessLevel::Partially;
  if (s == "very") return InformativenessLevel::Very;
  if (s == "fully") return InformativenessLevel::Fully;
  throw Error(ErrorCode::Parse, "unknown level: " + std::string(s));
}

InformativenessLevel informativeness(const IODGraph& graph) {
  require_valid(graph);
  bool all_inputs_some = true;
  bool all_pairs = true;
  bool any_pair = false;
  for (int i : graph.input_indices()) {
    int src[] = {i};
    std::vector<int> reach = reachable_from(graph, src);
    std::size_t hit = 0;
    for (int o : graph.output_indices()) {
      if (std::binary_search(reach.begin(), reach.end(), o)) ++hit;
    }
    any_pair = any_pair || hit > 0;
    all_inputs_some = all_inputs_some && hit > 0;
    all_pairs = all_pairs && hit == graph.output_indices().size();
  }
  if (all_pairs) return InformativenessLevel::Fully;
  if (all_inputs_some) return InformativenessLevel::Very;
  if (any_pair) return InformativenessLevel::Partially;
  return InformativenessLevel::Non;
}

ActionabilityLevel actionability(const IODGraph& graph) {
  require_valid(graph);
  bool all_outputs_some = true;
  bool all_pairs = true;
  bool any_pair = false;
  for (int o : graph.output_indices()) {
    int tgt[] = {o};
    std::vector<int> sources = reaches(graph, tgt);
    std::size_t hit = 0;
    for (int i : graph.input_indices()) {
      if (std::binary_search(sources.begin(), sources.end(), i)) ++hit;
    }
    any_pair = any_pair || hit > 0;
    all_outputs_some = all_outputs_some && hit > 0;
    all_pairs = all_pairs && hit == graph.input_indices().size();
  }
  if (all_pairs) return ActionabilityLevel::Fully;
  if (all_outputs_some) return ActionabilityLevel::Very;
  if (any_pair) return ActionabilityLevel::Partially;
  return ActionabilityLevel::Non;
}

DanglingReport no_dangling_nodes(const IODGraph& graph) {
  require_valid(graph);
  std::vector<int> fwd = reachable_from(graph, graph.input_indices());
  std::vector<int> bwd = reaches(graph, graph.output_indices());
  DanglingReport report;
  for (int m : graph.intermediate_indices()) {
    bool on_path = std::binary_search(fwd.begin(), fwd.end(), m) &&
                   std::binary_search(bwd.begin(), bwd.end(), m);
    if (!on_path) report.dangling.push_back(m);
  }
  report.satisfied = report.dangling.empty();
  return report;
}

}  // namespace iodg
