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

#include "iodg/evolution.hpp"

#include <algorithm>

#include "iodg/analysis.hpp"
#include "iodg/rng.hpp"

namespace iodg {

double fitness_of(const IODGraph& graph, const EvolutionConfig& config) {
  if (config.fitness == EvolutionConfig::Fitness::InformativenessRank) {
    return static_cast<double>(informativeness(graph));
  }
  double score = 0.0;
  for (const auto& [in_id, out_id] : config.target_pairs) {
    int i = graph.index_of(in_id);
    int o = graph.index_of(out_id);
    if (i < 0 || o < 0) continue;
    int src[] = {i};
    std::vector<int> reach = reachable_from(graph, src);
    if (std::binary_search(reach.begin(), reach.end(), o)) score += 1.0;
  }
  return score;
}

namespace {

std::size_t tournament(const std::vector<double>& fitness, Rng& rng) {
  std::size_t a = rng.below(fitness.size());
  std::size_t b = rng.below(fitness.size());
  if (fitness[b] > fitness[a]) return b;
  return a;  // ties go to the first pick
}

GenerationStats snapshot(std::size_t gen,
                         const std::vector<IODGraph>& population,
                         const std::vector<double>& fitness) {
  GenerationStats stats;
  stats.generation = gen;
  for (const IODGraph& g : population) {
    ++stats.informativeness[static_cast<std::size_t>(informativeness(g))];
  }
  stats.best_fitness = *std::max_element(fitness.begin(), fitness.end());
  return stats;
}

}  // namespace

std::vector<GenerationStats> evolve(std::vector<IODGraph> population,
                                    const EvolutionConfig& config) {
  if (population.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "population must be >= 2");
  }
  for (const IODGraph& g : population) require_valid(g);

  std::vector<double> fitness(population.size());
  auto evaluate = [&] {
    for (std::size_t i = 0; i < population.size(); ++i) {
      fitness[i] = fitness_of(population[i], config);
    }
  };
  evaluate();

  std::vector<GenerationStats> history;
  history.push_back(snapshot(0, population, fitness));

  for (std::size_t gen = 1; gen <= config.generations; ++gen) {
    std::vector<IODGraph> next;
    next.reserve(population.size());
    for (std::size_t c = 0; c < population.size(); ++c) {
      std::uint64_t child_seed = derive_seed(config.seed, gen, c);
      Rng rng(child_seed);
      std::size_t pa = tournament(fitness, rng);
      std::size_t pb = tournament(fitness, rng);
      try {
        CrossoverRecord rec =
            crossover(population[pa], population[pb], config.strategy,
                      derive_seed(child_seed, 1));
        next.push_back(std::move(rec.child));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Incompatible &&
            e.code() != ErrorCode::BudgetExceeded) {
          throw;
        }
        next.push_back(population[pa]);  // cloning fallback
      }
    }
    population = std::move(next);
    evaluate();
    history.push_back(snapshot(gen, population, fitness));
  }
  return history;
}

}  // namespace iodg
