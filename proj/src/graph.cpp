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

#include "iodg/graph.hpp"

#include <algorithm>

namespace iodg {

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Input:
      return "input";
    case NodeRole::Output:
      return "output";
    case NodeRole::Intermediate:
      return "intermediate";
  }
  return "intermediate";
}

NodeRole role_from_string(std::string_view s) {
  if (s == "input") return NodeRole::Input;
  if (s == "output") return NodeRole::Output;
  if (s == "intermediate") return NodeRole::Intermediate;
  throw Error(ErrorCode::Parse, "unknown node role: " + std::string(s));
}

IODGraph::IODGraph(
    std::vector<Node> nodes,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });
  index_.reserve(nodes_.size());
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (!index_.emplace(nodes_[i].id, i).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate node id: " + nodes_[i].id);
    }
  }
  edges_.reserve(edges.size());
  for (const auto& [src, dst] : edges) {
    edges_.emplace_back(require_index(src), require_index(dst));
  }
  // Node indices are in id order, so index comparison is id comparison.
  std::sort(edges_.begin(), edges_.end());

  out_.resize(nodes_.size());
  in_.resize(nodes_.size());
  for (const auto& [src, dst] : edges_) {
    out_[src].push_back(dst);
    in_[dst].push_back(src);
  }
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    switch (nodes_[i].role) {
      case NodeRole::Input:
        inputs_.push_back(i);
        break;
      case NodeRole::Output:
        outputs_.push_back(i);
        break;
      case NodeRole::Intermediate:
        intermediates_.push_back(i);
        break;
    }
  }
}

int IODGraph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

int IODGraph::require_index(std::string_view id) const {
  int idx = index_of(id);
  if (idx < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "unknown node id: " + std::string(id));
  }
  return idx;
}

bool IODGraph::has_edge(int src, int dst) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{src, dst});
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::EdgeIntoInput:
      return "edge-into-input";
    case Violation::Kind::EdgeFromOutput:
      return "edge-from-output";
    case Violation::Kind::DuplicateEdge:
      return "duplicate-edge";
    case Violation::Kind::NoInput:
      return "no-input-node";
    case Violation::Kind::NoOutput:
      return "no-output-node";
  }
  return "unknown";
}

ValidationReport validate(const IODGraph& graph) {
  ValidationReport report;
  auto edge_name = [&](const IODGraph::Edge& e) {
    return "(" + graph.node(e.first).id + ", " + graph.node(e.second).id + ")";
  };
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const auto& e = graph.edges()[i];
    if (graph.node(e.second).role == NodeRole::Input) {
      report.violations.push_back({Violation::Kind::EdgeIntoInput,
                                   "input " + graph.node(e.second).id +
                                       " has incoming edge " + edge_name(e)});
    }
    if (graph.node(e.first).role == NodeRole::Output) {
      report.violations.push_back({Violation::Kind::EdgeFromOutput,
                                   "output " + graph.node(e.first).id +
                                       " has outgoing edge " + edge_name(e)});
    }
    if (i > 0 && graph.edges()[i - 1] == e) {
      report.violations.push_back(
          {Violation::Kind::DuplicateEdge, "duplicate edge " + edge_name(e)});
    }
  }
  if (graph.input_indices().empty()) {
    report.violations.push_back({Violation::Kind::NoInput, "no input node"});
  }
  if (graph.output_indices().empty()) {
    report.violations.push_back({Violation::Kind::NoOutput, "no output node"});
  }
  report.ok = report.violations.empty();
  return report;
}

void require_valid(const IODGraph& graph) {
  ValidationReport report = validate(graph);
  if (!report.ok) {
    std::string msg = "invalid IOD graph:";
    for (const auto& v : report.violations) msg += " " + v.detail + ";";
    throw Error(ErrorCode::Validation, msg);
  }
}

bool is_feed_forward(const IODGraph& graph) {
  require_valid(graph);
  // Iterative DFS with colors; self-loops are back edges.
  const int n = static_cast<int>(graph.node_count());
  std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
  std::vector<std::pair<int, std::size_t>> stack;
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    stack.emplace_back(start, 0);
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < graph.out_neighbors(v).size()) {
        int w = graph.out_neighbors(v)[next++];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

namespace {

std::vector<int> sweep(const IODGraph& graph, std::span<const int> seeds,
                       bool forward) {
  std::vector<char> seen(graph.node_count(), 0);
  std::vector<int> frontier;
  for (int s : seeds) {
    if (s < 0 || s >= static_cast<int>(graph.node_count())) {
      throw Error(ErrorCode::InvalidArgument, "node index out of range");
    }
    if (!seen[s]) {
      seen[s] = 1;
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    const auto& next =
        forward ? graph.out_neighbors(v) : graph.in_neighbors(v);
    for (int w : next) {
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  std::vector<int> result;
  for (int i = 0; i < static_cast<int>(graph.node_count()); ++i) {
    if (seen[i]) result.push_back(i);
  }
  return result;
}

}  // namespace

std::vector<int> reachable_from(const IODGraph& graph,
                                std::span<const int> sources) {
  return sweep(graph, sources, /*forward=*/true);
}

std::vector<int> reaches(const IODGraph& graph, std::span<const int> targets) {
  return sweep(graph, targets, /*forward=*/false);
}

namespace {
std::vector<int> resolve(const IODGraph& graph,
                         std::span<const std::string> ids) {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) idx.push_back(graph.require_index(id));
  return idx;
}
}  // namespace

std::vector<int> reachable_from_ids(const IODGraph& graph,
                                    std::span<const std::string> sources) {
  return reachable_from(graph, resolve(graph, sources));
}

std::vector<int> reaches_ids(const IODGraph& graph,
                             std::span<const std::string> targets) {
  return reaches(graph, resolve(graph, targets));
}

std::uint64_t edge_universe_size(std::uint64_t num_inputs,
                                 std::uint64_t num_outputs,
                                 std::uint64_t num_intermediates,
                                 bool self_loops) {
  std::uint64_t mid_mid = num_intermediates * num_intermediates;
  if (!self_loops) mid_mid -= num_intermediates;
  return num_inputs * (num_intermediates + num_outputs) + mid_mid +
         num_intermediates * num_outputs;
}

}  // namespace iodg
