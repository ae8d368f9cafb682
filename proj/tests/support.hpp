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
//
// Shared test helpers: graph shorthand, slow independent oracles, and
// seeded random generators. The oracles walk the raw edge list with
// per-pair DFS on purpose -- they must not share code with the library's
// sweep-based classifiers they check.

#ifndef IODG_TESTS_SUPPORT_HPP_
#define IODG_TESTS_SUPPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iodg/analysis.hpp"
#include "iodg/graph.hpp"
#include "iodg/partition.hpp"
#include "iodg/rng.hpp"

namespace iodg::test {

// "name:i" / "name:o" / bare name for intermediates; optional ":tag=..."
inline IODGraph g(const std::vector<std::string>& node_specs,
                  const std::vector<std::pair<std::string, std::string>>&
                      edges = {}) {
  std::vector<Node> nodes;
  for (const std::string& spec : node_specs) {
    Node n;
    std::size_t colon = spec.find(':');
    n.id = spec.substr(0, colon);
    n.role = NodeRole::Intermediate;
    if (colon != std::string::npos) {
      std::string rest = spec.substr(colon + 1);
      if (rest == "i") {
        n.role = NodeRole::Input;
      } else if (rest == "o") {
        n.role = NodeRole::Output;
      } else if (rest.rfind("tag=", 0) == 0) {
        n.tag = rest.substr(4);
      }
    }
    nodes.push_back(std::move(n));
  }
  return IODGraph(std::move(nodes), edges);
}

// ---- independent oracles ------------------------------------------------

inline bool oracle_dfs(const IODGraph& graph, int v, int target,
                       std::vector<char>& visited) {
  if (v == target) return true;
  visited[v] = 1;
  for (const auto& e : graph.edges()) {
    if (e.first == v && !visited[e.second] &&
        oracle_dfs(graph, e.second, target, visited)) {
      return true;
    }
  }
  return false;
}

inline bool oracle_path(const IODGraph& graph, int from, int to) {
  std::vector<char> visited(graph.node_count(), 0);
  return oracle_dfs(graph, from, to, visited);
}

inline bool oracle_path_ids(const IODGraph& graph, const std::string& from,
                            const std::string& to) {
  return oracle_path(graph, graph.require_index(from),
                     graph.require_index(to));
}

inline InformativenessLevel oracle_informativeness(const IODGraph& graph) {
  bool any = false, all_some = true, all_pairs = true;
  for (int i : graph.input_indices()) {
    bool some = false, all = true;
    for (int o : graph.output_indices()) {
      bool p = oracle_path(graph, i, o);
      some = some || p;
      all = all && p;
      any = any || p;
    }
    all_some = all_some && some;
    all_pairs = all_pairs && all;
  }
  if (all_pairs) return InformativenessLevel::Fully;
  if (all_some) return InformativenessLevel::Very;
  if (any) return InformativenessLevel::Partially;
  return InformativenessLevel::Non;
}

inline ActionabilityLevel oracle_actionability(const IODGraph& graph) {
  bool any = false, all_some = true, all_pairs = true;
  for (int o : graph.output_indices()) {
    bool some = false, all = true;
    for (int i : graph.input_indices()) {
      bool p = oracle_path(graph, i, o);
      some = some || p;
      all = all && p;
      any = any || p;
    }
    all_some = all_some && some;
    all_pairs = all_pairs && all;
  }
  if (all_pairs) return ActionabilityLevel::Fully;
  if (all_some) return ActionabilityLevel::Very;
  if (any) return ActionabilityLevel::Partially;
  return ActionabilityLevel::Non;
}

inline std::vector<int> oracle_dangling(const IODGraph& graph) {
  std::vector<int> dangling;
  for (int m : graph.intermediate_indices()) {
    bool from_input = false, to_output = false;
    for (int i : graph.input_indices()) from_input |= oracle_path(graph, i, m);
    for (int o : graph.output_indices()) to_output |= oracle_path(graph, m, o);
    if (!from_input || !to_output) dangling.push_back(m);
  }
  return dangling;
}

inline bool oracle_ndn(const IODGraph& graph) {
  return oracle_dangling(graph).empty();
}

// Definition-level contiguity: per node, a DFS that may only step inside
// the node's own part.
inline bool oracle_restricted_path(const IODGraph& graph,
                                   const IOPartition& p, char side, int v,
                                   int target, std::vector<char>& visited) {
  if (v == target) return true;
  visited[v] = 1;
  for (const auto& e : graph.edges()) {
    if (e.first == v && p.side[e.second] == side && !visited[e.second] &&
        oracle_restricted_path(graph, p, side, e.second, target, visited)) {
      return true;
    }
  }
  return false;
}

inline bool oracle_input_contiguous(const IODGraph& graph,
                                    const IOPartition& p) {
  for (int n : p.psi) {
    if (graph.node(n).role == NodeRole::Input) continue;
    bool reached = false;
    for (int i : graph.input_indices()) {
      std::vector<char> visited(graph.node_count(), 0);
      if (oracle_restricted_path(graph, p, 0, i, n, visited)) {
        reached = true;
        break;
      }
    }
    if (!reached) return false;
  }
  return true;
}

inline bool oracle_output_contiguous(const IODGraph& graph,
                                     const IOPartition& p) {
  for (int n : p.omega) {
    if (graph.node(n).role == NodeRole::Output) continue;
    bool reaches_out = false;
    for (int o : graph.output_indices()) {
      std::vector<char> visited(graph.node_count(), 0);
      if (oracle_restricted_path(graph, p, 1, n, o, visited)) {
        reaches_out = true;
        break;
      }
    }
    if (!reaches_out) return false;
  }
  return true;
}

// ---- random generators ---------------------------------------------------

struct GenOptions {
  int max_inputs = 3;
  int max_outputs = 3;
  int max_intermediates = 6;
  bool acyclic = false;
};

inline IODGraph random_graph(Rng& rng, const GenOptions& opt = {}) {
  int ni = 1 + static_cast<int>(rng.below(opt.max_inputs));
  int no = 1 + static_cast<int>(rng.below(opt.max_outputs));
  int nm = static_cast<int>(rng.below(opt.max_intermediates + 1));
  double p = 0.1 + 0.4 * static_cast<double>(rng.below(1000)) / 1000.0;

  std::vector<std::string> in_ids, out_ids, mid_ids;
  std::vector<Node> nodes;
  for (int v = 0; v < ni; ++v) {
    in_ids.push_back("i" + std::to_string(v + 1));
    nodes.push_back({in_ids.back(), NodeRole::Input, ""});
  }
  for (int v = 0; v < no; ++v) {
    out_ids.push_back("o" + std::to_string(v + 1));
    nodes.push_back({out_ids.back(), NodeRole::Output, ""});
  }
  for (int v = 0; v < nm; ++v) {
    mid_ids.push_back("m" + std::to_string(v + 1));
    nodes.push_back({mid_ids.back(), NodeRole::Intermediate, ""});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& i : in_ids) {
    for (const auto& m : mid_ids) {
      if (rng.coin(p)) edges.emplace_back(i, m);
    }
    for (const auto& o : out_ids) {
      if (rng.coin(p)) edges.emplace_back(i, o);
    }
  }
  for (int a = 0; a < nm; ++a) {
    for (int b = 0; b < nm; ++b) {
      if (opt.acyclic && b <= a) continue;  // topological order by index
      if (rng.coin(p)) edges.emplace_back(mid_ids[a], mid_ids[b]);
    }
    for (const auto& o : out_ids) {
      if (rng.coin(p)) edges.emplace_back(mid_ids[a], o);
    }
  }
  return IODGraph(std::move(nodes), edges);
}

// Drops dangling intermediates so the result satisfies no-dangling-nodes.
inline IODGraph trim_dangling(const IODGraph& graph) {
  std::vector<int> dangling = oracle_dangling(graph);
  if (dangling.empty()) return graph;
  std::vector<char> drop(graph.node_count(), 0);
  for (int v : dangling) drop[v] = 1;
  std::vector<Node> nodes;
  for (int v = 0; v < static_cast<int>(graph.node_count()); ++v) {
    if (!drop[v]) nodes.push_back(graph.node(v));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : graph.edges()) {
    if (!drop[e.first] && !drop[e.second]) {
      edges.emplace_back(graph.node(e.first).id, graph.node(e.second).id);
    }
  }
  return IODGraph(std::move(nodes), edges);
}

// Buckets a graph's partitions under `filter` by (|F|, |B|).
inline std::map<std::pair<std::size_t, std::size_t>, std::vector<IOPartition>>
partition_buckets(const IODGraph& graph, PartitionFilter filter) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<IOPartition>> out;
  for_each_partition(graph, filter, [&](const IOPartition& p) {
    Membrane m = membrane(graph, p);
    out[{m.forward.size(), m.backward.size()}].push_back(p);
    return true;
  });
  return out;
}

struct CompatiblePair {
  IODGraph g, gp;
  IOPartition pa, pb;
};

// Draws a compatible pair: random graphs through the predicates, then a
// seeded choice among partition pairs with equal link counts. filter_a
// applies to the input parent's partitions, filter_b to the output
// parent's.
template <typename PredA, typename PredB>
std::optional<CompatiblePair> sample_compatible_pair(
    Rng& rng, const GenOptions& opt, PartitionFilter filter_a,
    PartitionFilter filter_b, PredA&& pred_a, PredB&& pred_b,
    int graph_tries = 40) {
  for (int attempt = 0; attempt < graph_tries; ++attempt) {
    IODGraph a = random_graph(rng, opt);
    if (!validate(a).ok || !pred_a(a)) continue;
    IODGraph b = random_graph(rng, opt);
    if (!validate(b).ok || !pred_b(b)) continue;
    auto buckets_a = partition_buckets(a, filter_a);
    auto buckets_b = partition_buckets(b, filter_b);
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    for (const auto& [key, parts] : buckets_a) {
      if (buckets_b.count(key)) keys.push_back(key);
    }
    if (keys.empty()) continue;
    auto key = keys[rng.below(keys.size())];
    const auto& pa_list = buckets_a[key];
    const auto& pb_list = buckets_b[key];
    CompatiblePair pair;
    pair.pa = pa_list[rng.below(pa_list.size())];
    pair.pb = pb_list[rng.below(pb_list.size())];
    pair.g = std::move(a);
    pair.gp = std::move(b);
    return pair;
  }
  return std::nullopt;
}

inline bool any_graph(const IODGraph&) { return true; }

}  // namespace iodg::test

#endif  // IODG_TESTS_SUPPORT_HPP_
