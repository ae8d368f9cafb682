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

#ifndef IODG_CENSUS_HPP_
#define IODG_CENSUS_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "iodg/graph.hpp"

namespace iodg {

/// A graph universe with a fixed node layout and fixed input/output wiring;
/// only the intermediate-to-intermediate slots vary. Inputs are i1..iJ,
/// outputs o1..oK, intermediates n1..nM; wiring entries are intermediate
/// indices (0-based). Slot index src * M + dst identifies the default
/// variable slots, self-loops included.
struct CensusConfig {
  int num_inputs = 3;
  int num_outputs = 2;
  int num_intermediates = 5;
  std::vector<int> input_wiring;              // input j -> intermediate
  std::vector<int> output_wiring;             // output k <- intermediate
  std::vector<std::pair<int, int>> slots;     // variable edge slots
  enum class Mode { Exhaustive, Sample };
  Mode mode = Mode::Exhaustive;
  std::uint64_t sample_n = 0;                 // draws per edge count
  std::uint64_t seed = 0;
  std::uint64_t budget = 1ull << 26;          // max universe for Exhaustive
  int threads = 0;                            // 0 = hardware concurrency
};

/// Disjoint default wiring: input j feeds n(j mod M); output k is fed from
/// n(M - K + k mod M). Slots default to all M*M intermediate pairs.
CensusConfig default_census_config(int num_inputs, int num_outputs,
                                   int num_intermediates);

struct CensusRow {
  std::uint64_t total = 0;
  std::uint64_t non = 0;
  std::uint64_t partially = 0;
  std::uint64_t very = 0;
  std::uint64_t fully = 0;
};

struct CensusTable {
  std::vector<CensusRow> rows;  // indexed by edge count k, 0..|slots|
  bool sampled = false;
  std::uint64_t sample_n = 0;
  std::uint64_t seed = 0;
};

using CensusProgress = std::function<void(std::uint64_t done,
                                          std::uint64_t total)>;

/// Tabulates informativeness by variable-edge count over the whole universe
/// (or `sample_n` stratified draws per edge count). The exhaustive sweep
/// classifies straight off the slot bitmask with word-parallel reachability
/// (no graph objects), shards the mask range across threads, and merges
/// tallies; results are deterministic either way. Throws
/// Error(BudgetExceeded) when 2^|slots| exceeds the configured budget.
CensusTable run_census(const CensusConfig& config,
                       const CensusProgress& progress = nullptr);

/// CSV: optional "# mode=sample ..." comment, header
/// k,total,non,partial,very,full, one row per edge count ascending.
void emit_csv(const CensusTable& table, std::ostream& out);

/// Materializes universe member `mask` (bit i = slot i present) as a full
/// graph, for oracles and spot checks.
IODGraph census_member(const CensusConfig& config, std::uint64_t mask);

/// Classifies one universe member through the same fast kernel the sweep
/// uses (0 non, 1 partially, 2 very, 3 fully), so spot checks can compare
/// the kernel against a slow reclassification of census_member().
int classify_census_member(const CensusConfig& config, std::uint64_t mask);

}  // namespace iodg

#endif  // IODG_CENSUS_HPP_
