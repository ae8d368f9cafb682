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

#ifndef IODG_TESTS_FIXTURES_HPP_
#define IODG_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "iodg/crossover.hpp"
#include "iodg/graph.hpp"
#include "iodg/partition.hpp"

namespace iodg::test {

// The worked crossover example: an input parent cut with three forward
// links {(A,C),(D,E),(D,O2)} and one backward link {(C,A)}, an output
// parent cut with forward links {(V,X),(W,Y),(I3p,Y)} and backward link
// {(X,W)}, and the spliced membrane {(A,Y),(D,Y),(D,X),(X,A)}.
struct WorkedExample {
  IODGraph g, gp;
  IOPartition pa, pb;
  MatchingSpec m3;
};

inline WorkedExample worked_example() {
  WorkedExample w;
  w.g = IODGraph(
      {
          {"I1", NodeRole::Input, ""},
          {"I2", NodeRole::Input, ""},
          {"I3", NodeRole::Input, ""},
          {"A", NodeRole::Intermediate, ""},
          {"B", NodeRole::Intermediate, ""},
          {"C", NodeRole::Intermediate, ""},
          {"D", NodeRole::Intermediate, ""},
          {"E", NodeRole::Intermediate, ""},
          {"O1", NodeRole::Output, ""},
          {"O2", NodeRole::Output, ""},
      },
      {{"I1", "A"},
       {"I2", "B"},
       {"I3", "D"},
       {"B", "D"},
       {"A", "C"},
       {"D", "E"},
       {"D", "O2"},
       {"C", "A"},
       {"C", "E"},
       {"E", "O1"}});
  w.gp = IODGraph(
      {
          {"I1p", NodeRole::Input, ""},
          {"I2p", NodeRole::Input, ""},
          {"I3p", NodeRole::Input, ""},
          {"V", NodeRole::Intermediate, ""},
          {"W", NodeRole::Intermediate, ""},
          {"X", NodeRole::Intermediate, ""},
          {"Y", NodeRole::Intermediate, ""},
          {"Z", NodeRole::Intermediate, ""},
          {"O1", NodeRole::Output, ""},
          {"O2", NodeRole::Output, ""},
      },
      {{"I1p", "V"},
       {"I2p", "W"},
       {"V", "X"},
       {"W", "Y"},
       {"I3p", "Y"},
       {"X", "W"},
       {"Y", "Z"},
       {"Z", "O2"},
       {"X", "O1"}});
  std::vector<std::string> psi = {"I1", "I2", "I3", "A", "B", "D"};
  std::vector<std::string> psi_prime = {"I1p", "I2p", "I3p", "V", "W"};
  w.pa = make_partition_ids(w.g, psi);
  w.pb = make_partition_ids(w.gp, psi_prime);
  w.m3.mode = MatchingMode::Explicit;
  w.m3.forward_pairs = {{{"A", "C"}, {"W", "Y"}},
                        {{"D", "E"}, {"I3p", "Y"}},
                        {{"D", "O2"}, {"V", "X"}}};
  w.m3.backward_pairs = {{{"X", "W"}, {"C", "A"}}};
  return w;
}

// Fully connected feed-forward stack: layer_sizes.front() inputs,
// layer_sizes.back() outputs.
inline IODGraph perceptron(const std::vector<int>& layer_sizes) {
  std::vector<Node> nodes;
  std::vector<std::vector<std::string>> layers;
  for (std::size_t l = 0; l < layer_sizes.size(); ++l) {
    std::vector<std::string> layer;
    for (int v = 0; v < layer_sizes[l]; ++v) {
      std::string id = "l" + std::to_string(l) + "_" + std::to_string(v);
      NodeRole role = l == 0 ? NodeRole::Input
                             : (l + 1 == layer_sizes.size()
                                    ? NodeRole::Output
                                    : NodeRole::Intermediate);
      nodes.push_back({id, role, ""});
      layer.push_back(id);
    }
    layers.push_back(std::move(layer));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
    for (const auto& a : layers[l]) {
      for (const auto& b : layers[l + 1]) edges.emplace_back(a, b);
    }
  }
  return IODGraph(std::move(nodes), edges);
}

}  // namespace iodg::test

#endif  // IODG_TESTS_FIXTURES_HPP_
