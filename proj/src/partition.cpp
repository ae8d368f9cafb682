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

#include "iodg/partition.hpp"

#include <algorithm>

namespace iodg {

namespace {

IOPartition from_side(const IODGraph& graph, std::vector<char> side) {
  IOPartition p;
  p.side = std::move(side);
  for (int v = 0; v < static_cast<int>(graph.node_count()); ++v) {
    (p.side[v] == 0 ? p.psi : p.omega).push_back(v);
  }
  return p;
}

}  // namespace

IOPartition make_partition(const IODGraph& graph, std::span<const int> psi) {
  std::vector<char> side(graph.node_count(), 1);
  for (int v : psi) {
    if (v < 0 || v >= static_cast<int>(graph.node_count())) {
      throw Error(ErrorCode::InvalidArgument, "psi node index out of range");
    }
    side[v] = 0;
  }
  for (int i : graph.input_indices()) {
    if (side[i] != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "input " + graph.node(i).id + " missing from psi");
    }
  }
  for (int o : graph.output_indices()) {
    if (side[o] == 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "output " + graph.node(o).id + " present in psi");
    }
  }
  return from_side(graph, std::move(side));
}

IOPartition make_partition_ids(const IODGraph& graph,
                               std::span<const std::string> psi) {
  std::vector<int> idx;
  idx.reserve(psi.size());
  for (const auto& id : psi) idx.push_back(graph.require_index(id));
  return make_partition(graph, idx);
}

Membrane membrane(const IODGraph& graph, const IOPartition& partition) {
  if (partition.side.size() != graph.node_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "partition does not match graph (node count differs)");
  }
  Membrane m;
  for (const auto& e : graph.edges()) {
    bool src_psi = partition.in_psi(e.first);
    bool dst_psi = partition.in_psi(e.second);
    if (src_psi && !dst_psi) m.forward.push_back(e);
    if (!src_psi && dst_psi) m.backward.push_back(e);
  }
  return m;  // graph.edges() is sorted, so both lists are too
}

namespace {

// Reachability restricted to one side of a partition.
bool side_covered(const IODGraph& graph, const IOPartition& partition,
                  char side_value, std::span<const int> seeds, bool forward) {
  std::vector<char> seen(graph.node_count(), 0);
  std::vector<int> frontier;
  for (int s : seeds) {
    seen[s] = 1;
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    const auto& next =
        forward ? graph.out_neighbors(v) : graph.in_neighbors(v);
    for (int w : next) {
      if (partition.side[w] == side_value && !seen[w]) {
        seen[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  const auto& members = side_value == 0 ? partition.psi : partition.omega;
  for (int v : members) {
    if (!seen[v]) return false;
  }
  return true;
}

}  // namespace

bool is_input_contiguous(const IODGraph& graph, const IOPartition& partition) {
  return side_covered(graph, partition, 0, graph.input_indices(),
                      /*forward=*/true);
}

bool is_output_contiguous(const IODGraph& graph,
                          const IOPartition& partition) {
  return side_covered(graph, partition, 1, graph.output_indices(),
                      /*forward=*/false);
}

PartitionFilter partition_filter_from_string(std::string_view s) {
  if (s == "all") return PartitionFilter::All;
  if (s == "input-contiguous") return PartitionFilter::InputContiguous;
  if (s == "output-contiguous") return PartitionFilter::OutputContiguous;
  if (s == "contiguous") return PartitionFilter::Contiguous;
  if (s == "layer-respecting") return PartitionFilter::LayerRespecting;
  throw Error(ErrorCode::InvalidArgument,
              "unknown partition filter: " + std::string(s));
}

namespace {

bool passes(const IODGraph& graph, const IOPartition& p,
            PartitionFilter filter) {
  switch (filter) {
    case PartitionFilter::All:
    case PartitionFilter::LayerRespecting:
      return true;
    case PartitionFilter::InputContiguous:
      return is_input_contiguous(graph, p);
    case PartitionFilter::OutputContiguous:
      return is_output_contiguous(graph, p);
    case PartitionFilter::Contiguous:
      return is_input_contiguous(graph, p) && is_output_contiguous(graph, p);
  }
  return false;
}

// Walks subsets of `groups` in lexicographic membership order. Each group is
// the unit that moves between sides; base_side holds forced assignments.
bool walk_groups(const IODGraph& graph, PartitionFilter filter,
                 const std::vector<std::vector<int>>& groups,
                 std::vector<char> base_side,
                 const std::function<bool(const IOPartition&)>& callback) {
  const std::size_t m = groups.size();
  if (m >= 63) {
    throw Error(ErrorCode::BudgetExceeded,
                "partition enumeration over " + std::to_string(m) +
                    " free groups is out of range");
  }
  std::uint64_t total = 1ull << m;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<char> side = base_side;
    for (std::size_t j = 0; j < m; ++j) {
      // Bit for group j, group 0 most significant: lexicographic order.
      bool to_psi = (k >> (m - 1 - j)) & 1;
      if (to_psi) {
        for (int v : groups[j]) side[v] = 0;
      }
    }
    IOPartition p = from_side(graph, std::move(side));
    if (!passes(graph, p, filter)) continue;
    if (!callback(p)) return false;
  }
  return true;
}

}  // namespace

void for_each_partition(
    const IODGraph& graph, PartitionFilter filter,
    const std::function<bool(const IOPartition&)>& callback,
    const std::unordered_map<std::string, int>* layers) {
  require_valid(graph);

  // Omega is the default side; groups moved into psi are enumerated.
  std::vector<char> base_side(graph.node_count(), 1);
  for (int i : graph.input_indices()) base_side[i] = 0;

  if (filter != PartitionFilter::LayerRespecting) {
    std::vector<std::vector<int>> groups;
    for (int v : graph.intermediate_indices()) groups.push_back({v});
    walk_groups(graph, filter, groups, std::move(base_side), callback);
    return;
  }

  if (layers == nullptr) {
    throw Error(ErrorCode::InvalidArgument,
                "layer-respecting enumeration needs a layer map");
  }
  std::unordered_map<int, std::vector<int>> by_layer;
  std::unordered_map<int, int> forced;  // layer -> side
  for (int v = 0; v < static_cast<int>(graph.node_count()); ++v) {
    auto it = layers->find(graph.node(v).id);
    if (it == layers->end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "layer map missing node " + graph.node(v).id);
    }
    by_layer[it->second].push_back(v);
    NodeRole role = graph.node(v).role;
    if (role == NodeRole::Intermediate) continue;
    int want = role == NodeRole::Input ? 0 : 1;
    auto [f, inserted] = forced.emplace(it->second, want);
    if (!inserted && f->second != want) return;  // no valid partition
  }
  std::vector<std::vector<int>> free_groups;
  std::vector<int> layer_ids;
  for (const auto& [layer, members] : by_layer) layer_ids.push_back(layer);
  std::sort(layer_ids.begin(), layer_ids.end());
  for (int layer : layer_ids) {
    auto it = forced.find(layer);
    if (it == forced.end()) {
      free_groups.push_back(by_layer[layer]);
    } else if (it->second == 0) {
      for (int v : by_layer[layer]) base_side[v] = 0;
    }
  }
  walk_groups(graph, filter, free_groups, std::move(base_side), callback);
}

std::uint64_t count_partitions(
    const IODGraph& graph, PartitionFilter filter,
    const std::unordered_map<std::string, int>* layers) {
  std::uint64_t n = 0;
  for_each_partition(
      graph, filter,
      [&](const IOPartition&) {
        ++n;
        return true;
      },
      layers);
  return n;
}

}  // namespace iodg
