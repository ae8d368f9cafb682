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

#ifndef IODG_EVOLUTION_HPP_
#define IODG_EVOLUTION_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iodg/crossover.hpp"
#include "iodg/graph.hpp"

namespace iodg {

// Minimal generational loop isolating crossover's effect: tournament
// selection, crossover with a cloning fallback, no mutation.
struct EvolutionConfig {
  std::size_t generations = 0;
  enum class Fitness { InformativenessRank, TargetReachability };
  Fitness fitness = Fitness::InformativenessRank;
  // For TargetReachability: required (input id, output id) paths. Ids that a
  // graph lacks score as unreached.
  std::vector<std::pair<std::string, std::string>> target_pairs;
  CrossoverStrategy strategy;
  std::uint64_t seed = 0;
};

struct GenerationStats {
  std::size_t generation = 0;
  // non / partially / very / fully counts over the population
  std::array<std::size_t, 4> informativeness = {};
  double best_fitness = 0.0;
};

double fitness_of(const IODGraph& graph, const EvolutionConfig& config);

/// Runs the loop and returns one stats entry for the initial population plus
/// one per generation. Children draw seeds derived from (seed, generation,
/// index), so histories are reproducible and independent of evaluation
/// order. Population size stays constant; incompatibility falls back to
/// cloning the first-selected parent.
std::vector<GenerationStats> evolve(std::vector<IODGraph> population,
                                    const EvolutionConfig& config);

}  // namespace iodg

#endif  // IODG_EVOLUTION_HPP_
