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

#ifndef IODG_CONSTRUCTIONS_HPP_
#define IODG_CONSTRUCTIONS_HPP_

#include "iodg/analysis.hpp"
#include "iodg/crossover.hpp"
#include "iodg/graph.hpp"
#include "iodg/partition.hpp"

namespace iodg {

/// A ready-to-cross parent pair: graphs, partitions, a membrane, and the
/// classification the resulting child must have.
struct ConstructionOutput {
  IODGraph input_parent;
  IODGraph output_parent;
  IOPartition input_partition;   // partition of input_parent
  IOPartition output_partition;  // partition of output_parent
  CrossoverMembrane membrane;
  InformativenessLevel expected_child = InformativenessLevel::Non;
};

IODGraph make_child(const ConstructionOutput& c);

/// Parent pair whose child loses all informativeness: each real
/// input-to-output path is spliced into a false output, and every false
/// input is spliced into the output parent's structure. Parents hit
/// `parent_level` exactly; the choice of which paths run to completion and
/// which stop at a dead-end intermediate sets the level.
///
/// Level feasibility: Partially needs j >= 2 (some input must reach
/// nothing) and Very needs k >= 2 (otherwise Very collapses into Fully);
/// infeasible combinations throw Error(InvalidArgument).
ConstructionOutput build_theorem1_pair(int j, int k,
                                       InformativenessLevel parent_level);

/// Fully informative parents (node-disjoint unique paths, no dangling
/// nodes, contiguous partitions) whose child funnels each input's paths
/// into a single output: Very but not Fully. j = k >= 2.
ConstructionOutput build_theorem5_pair(int j);

/// Two parents realizing I1->O1, I2->O2 with opposite internal conventions.
/// The bad membrane's child gets the mapping exactly wrong; the good
/// membrane {(N1,N4),(N2,N3)} gets it right.
struct CompetingConventionsPair {
  ConstructionOutput bad;
  ConstructionOutput good;
};
CompetingConventionsPair build_competing_conventions_pair();

/// Two non-informative parents whose child is fully informative. Both
/// parents necessarily violate the no-dangling-nodes condition.
ConstructionOutput build_non_to_fully_pair();

}  // namespace iodg

#endif  // IODG_CONSTRUCTIONS_HPP_
