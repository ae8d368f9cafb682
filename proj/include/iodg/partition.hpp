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

#ifndef IODG_PARTITION_HPP_
#define IODG_PARTITION_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "iodg/graph.hpp"

namespace iodg {

/// A two-part split of a graph's nodes: inputs live in psi, outputs in
/// omega, intermediates on either side.
struct IOPartition {
  std::vector<int> psi;    // sorted node indices
  std::vector<int> omega;  // sorted node indices
  std::vector<char> side;  // side[v] == 0 for psi, 1 for omega

  bool in_psi(int v) const { return side[v] == 0; }

  friend bool operator==(const IOPartition& a, const IOPartition& b) {
    return a.psi == b.psi;
  }
};

/// The cut edges of an IO partition. Forward links run psi -> omega,
/// backward links omega -> psi.
struct Membrane {
  std::vector<IODGraph::Edge> forward;   // sorted
  std::vector<IODGraph::Edge> backward;  // sorted
};

/// Builds the partition with the given psi; omega is the complement.
/// Throws Error(InvalidArgument) when an input is missing from psi or an
/// output is present in it.
IOPartition make_partition(const IODGraph& graph, std::span<const int> psi);
IOPartition make_partition_ids(const IODGraph& graph,
                               std::span<const std::string> psi);

Membrane membrane(const IODGraph& graph, const IOPartition& partition);

/// True iff every non-input node of psi is reachable from an input by a path
/// lying entirely within psi.
bool is_input_contiguous(const IODGraph& graph, const IOPartition& partition);

/// Mirror: every non-output node of omega reaches an output within omega.
bool is_output_contiguous(const IODGraph& graph, const IOPartition& partition);

enum class PartitionFilter {
  All,
  InputContiguous,
  OutputContiguous,
  Contiguous,
  LayerRespecting,
};

PartitionFilter partition_filter_from_string(std::string_view s);

/// Streams the IO partitions of `graph` passing `filter`, one per subset of
/// intermediates assigned to psi (2^m under All). Order is deterministic:
/// lexicographic by membership over intermediates in id order, so psi = I
/// comes first and psi = N \ O last. The callback returns false to stop
/// early; the walk is lazy, so 2^m is never materialized.
///
/// LayerRespecting needs `layers` covering every node; same-layer nodes land
/// on the same side. A layer holding both an input and an output admits no
/// partition, so the stream is empty.
void for_each_partition(
    const IODGraph& graph, PartitionFilter filter,
    const std::function<bool(const IOPartition&)>& callback,
    const std::unordered_map<std::string, int>* layers = nullptr);

std::uint64_t count_partitions(
    const IODGraph& graph, PartitionFilter filter,
    const std::unordered_map<std::string, int>* layers = nullptr);

}  // namespace iodg

#endif  // IODG_PARTITION_HPP_
