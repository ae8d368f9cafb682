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

#ifndef IODG_CROSSOVER_HPP_
#define IODG_CROSSOVER_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "iodg/graph.hpp"
#include "iodg/partition.hpp"

namespace iodg {

// Edges named by node id, usable across graphs.
using IdEdge = std::pair<std::string, std::string>;

enum class MatchingMode { Sequential, SeededRandom, Explicit };

/// How forward links of the input parent pair with forward links of the
/// output parent (and backward links the other way around).
///   Sequential   lexicographic link order on both sides, i-th with i-th
///   SeededRandom reproducible uniform permutation pairing
///   Explicit     caller-supplied bijections
/// With tag_constrained set, a spliced edge may only join nodes of equal
/// tag; pairing then solves a bipartite perfect matching and fails cleanly
/// when none exists.
struct MatchingSpec {
  MatchingMode mode = MatchingMode::Sequential;
  std::uint64_t seed = 0;
  bool tag_constrained = false;
  std::vector<std::pair<IdEdge, IdEdge>> forward_pairs;   // f in G -> f' in G'
  std::vector<std::pair<IdEdge, IdEdge>> backward_pairs;  // b' in G' -> b in G
};

/// The spliced edge set joining psi of the input parent to omega' of the
/// output parent: each matched (f, f') contributes (source(f), dest(f')),
/// each matched (b', b) contributes (source(b'), dest(b)).
///
/// `edges` lives in the child namespace (omega'-side ids may be qualified,
/// see crossover_child) and is a set: pairs with equal sources and equal
/// destinations collapse. Provenance keeps all |F| + |B| pairs.
struct CrossoverMembrane {
  std::vector<IdEdge> edges;  // sorted, deduplicated
  std::vector<std::pair<IdEdge, IdEdge>> forward_pairs;
  std::vector<std::pair<IdEdge, IdEdge>> backward_pairs;

  friend bool operator==(const CrossoverMembrane&,
                         const CrossoverMembrane&) = default;
};

struct CompatibilityResult {
  bool compatible = false;
  std::string reason;  // first failing clause; empty when compatible

  explicit operator bool() const { return compatible; }
};

/// Checks |F| = |F'|, |B| = |B'| and the cross-parent disjointness clauses.
/// By default the two parents are treated as separate namespaces (the child
/// qualifies colliding ids), so disjointness holds structurally; with
/// strict_ids the literal id sets are compared instead.
CompatibilityResult crossover_compatible(const IODGraph& g,
                                         const IOPartition& pa,
                                         const IODGraph& gp,
                                         const IOPartition& pb,
                                         bool strict_ids = false);

/// Throws Error(Incompatible) on incompatible partitions and
/// Error(Infeasible) when a tag-constrained perfect matching does not exist.
CrossoverMembrane build_crossover_membrane(const IODGraph& g,
                                           const IOPartition& pa,
                                           const IODGraph& gp,
                                           const IOPartition& pb,
                                           const MatchingSpec& spec,
                                           bool strict_ids = false);

/// Streams all |F|! * |B|! pairings in deterministic (lexicographic
/// permutation) order. With dedupe, only distinct spliced edge sets are
/// yielded. Callback returns false to stop.
void for_each_crossover_membrane(
    const IODGraph& g, const IOPartition& pa, const IODGraph& gp,
    const IOPartition& pb, bool dedupe,
    const std::function<bool(const CrossoverMembrane&)>& callback,
    bool strict_ids = false);

/// Child on psi union omega': internal edges of both sides plus the
/// membrane. Output-parent ids colliding with input-parent ids get "'"
/// appended until unique. Verifies the membrane's provenance against the
/// partitions (Error(InvalidArgument) on mismatch).
IODGraph crossover_child(const IODGraph& g, const IOPartition& pa,
                         const IODGraph& gp, const IOPartition& pb,
                         const CrossoverMembrane& membrane,
                         bool strict_ids = false);

struct CrossoverStrategy {
  enum class Search { Exhaustive, Seeded } search = Search::Seeded;
  PartitionFilter filter = PartitionFilter::Contiguous;
  MatchingSpec matching;
  std::uint64_t max_attempts = 4096;
  bool strict_ids = false;
};

/// Full provenance of one crossover; replay rebuilds an identical child.
struct CrossoverRecord {
  IODGraph child;
  std::string input_parent, output_parent;
  std::vector<std::string> psi;        // input parent's psi, by id
  std::vector<std::string> psi_prime;  // output parent's psi, by id
  CrossoverMembrane membrane;
  std::uint64_t seed = 0;
  bool strict_ids = false;
};

/// End-to-end convenience: searches partition pairs under the strategy's
/// filter, takes the first compatible pair, builds a membrane per the
/// matching spec, and assembles the child. Seeded search draws partition
/// pairs at random; exhaustive search scans lexicographic pairs. Throws
/// Error(Incompatible) when an exhaustive scan finds nothing and
/// Error(BudgetExceeded) when max_attempts runs out first.
CrossoverRecord crossover(const IODGraph& g, const IODGraph& gp,
                          const CrossoverStrategy& strategy,
                          std::uint64_t seed,
                          const std::string& input_label = "G",
                          const std::string& output_label = "G'");

/// Rebuilds the child a record describes from the same two parents.
IODGraph replay(const IODGraph& g, const IODGraph& gp,
                const CrossoverRecord& record);

}  // namespace iodg

#endif  // IODG_CROSSOVER_HPP_
