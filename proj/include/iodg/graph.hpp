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

#ifndef IODG_GRAPH_HPP_
#define IODG_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iodg/error.hpp"

namespace iodg {

enum class NodeRole { Input, Output, Intermediate };

std::string_view to_string(NodeRole role);
NodeRole role_from_string(std::string_view s);

struct Node {
  std::string id;
  NodeRole role = NodeRole::Intermediate;
  std::string tag;  // empty = untagged; tags constrain crossover matching

  friend bool operator==(const Node&, const Node&) = default;
};

/// A directed graph over role-labelled nodes: inputs feed edges out, outputs
/// take edges in, intermediates do both. Instances are immutable after
/// construction and safe to share across threads.
///
/// Construction normalizes to canonical order (nodes lexicographic by id,
/// edges lexicographic by endpoint ids) and rejects states the type cannot
/// represent: duplicate node ids and edges naming unknown nodes. Everything
/// else -- role violations, duplicate edges, missing inputs/outputs -- is
/// representable and reported by validate() as data.
class IODGraph {
 public:
  using Edge = std::pair<int, int>;  // node indices, src -> dst

  IODGraph() = default;
  IODGraph(std::vector<Node> nodes,
           const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Sorted lexicographically by id; index order equals id order.
  const std::vector<Node>& nodes() const { return nodes_; }
  // Sorted by (src, dst) index pairs; may contain duplicates (validate flags
  // them).
  const std::vector<Edge>& edges() const { return edges_; }

  const Node& node(int idx) const { return nodes_[idx]; }
  int index_of(std::string_view id) const;  // -1 when absent
  int require_index(std::string_view id) const;

  const std::vector<int>& out_neighbors(int idx) const { return out_[idx]; }
  const std::vector<int>& in_neighbors(int idx) const { return in_[idx]; }
  bool has_edge(int src, int dst) const;

  const std::vector<int>& input_indices() const { return inputs_; }
  const std::vector<int>& output_indices() const { return outputs_; }
  const std::vector<int>& intermediate_indices() const {
    return intermediates_;
  }

  friend bool operator==(const IODGraph&, const IODGraph&) = default;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> inputs_, outputs_, intermediates_;
  std::unordered_map<std::string, int> index_;
};

struct Violation {
  enum class Kind {
    EdgeIntoInput,
    EdgeFromOutput,
    DuplicateEdge,
    NoInput,
    NoOutput,
  };
  Kind kind;
  std::string detail;  // names the offending node or edge
};

std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
};

/// Checks every defining invariant. Violations are data, not failures.
ValidationReport validate(const IODGraph& graph);

/// Throws Error(Validation) when the graph does not validate. Most analysis
/// entry points call this first.
void require_valid(const IODGraph& graph);

/// True iff the graph has no directed cycle (self-loops count).
bool is_feed_forward(const IODGraph& graph);

/// All nodes reachable from `sources` by a directed path of length >= 0.
/// Cycle-safe. Returns sorted node indices.
std::vector<int> reachable_from(const IODGraph& graph,
                                std::span<const int> sources);

/// Mirror of reachable_from on reversed edges: all nodes from which some
/// target is reachable.
std::vector<int> reaches(const IODGraph& graph, std::span<const int> targets);

// Id-based conveniences; throw Error(InvalidArgument) on unknown ids.
std::vector<int> reachable_from_ids(const IODGraph& graph,
                                    std::span<const std::string> sources);
std::vector<int> reaches_ids(const IODGraph& graph,
                             std::span<const std::string> targets);

/// Number of permitted edge slots for a node layout:
/// inputs x (intermediates + outputs) + intermediates x intermediates
/// (minus the diagonal when self-loops are off) + intermediates x outputs.
std::uint64_t edge_universe_size(std::uint64_t num_inputs,
                                 std::uint64_t num_outputs,
                                 std::uint64_t num_intermediates,
                                 bool self_loops);

}  // namespace iodg

#endif  // IODG_GRAPH_HPP_
