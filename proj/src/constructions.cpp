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

#include "iodg/constructions.hpp"

#include <set>
#include <string>

namespace iodg {

namespace {

std::string num(int v) { return std::to_string(v); }

ConstructionOutput assemble(IODGraph g, std::vector<std::string> psi,
                            IODGraph gp, std::vector<std::string> psi_prime,
                            MatchingSpec spec,
                            InformativenessLevel expected) {
  ConstructionOutput out;
  out.input_parent = std::move(g);
  out.output_parent = std::move(gp);
  out.input_partition = make_partition_ids(out.input_parent, psi);
  out.output_partition = make_partition_ids(out.output_parent, psi_prime);
  out.membrane =
      build_crossover_membrane(out.input_parent, out.input_partition,
                               out.output_parent, out.output_partition, spec);
  out.expected_child = expected;
  return out;
}

}  // namespace

IODGraph make_child(const ConstructionOutput& c) {
  return crossover_child(c.input_parent, c.input_partition, c.output_parent,
                         c.output_partition, c.membrane);
}

ConstructionOutput build_theorem1_pair(int j, int k,
                                       InformativenessLevel parent_level) {
  if (j < 1 || k < 1) {
    throw Error(ErrorCode::InvalidArgument, "need j >= 1 and k >= 1");
  }
  if (parent_level == InformativenessLevel::Partially && j < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "exactly-partially informative parents need j >= 2");
  }
  if (parent_level == InformativenessLevel::Very && k < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "very-but-not-fully informative parents need k >= 2");
  }

  // Which of the j*k paths run through to their output. The rest stop at a
  // dead-end intermediate, lowering the parents' informativeness.
  std::set<std::pair<int, int>> complete;
  switch (parent_level) {
    case InformativenessLevel::Fully:
      for (int i = 1; i <= j; ++i)
        for (int o = 1; o <= k; ++o) complete.insert({i, o});
      break;
    case InformativenessLevel::Very:
      for (int i = 1; i <= j; ++i) complete.insert({i, 1});
      break;
    case InformativenessLevel::Partially:
      complete.insert({1, 1});
      break;
    case InformativenessLevel::Non:
      break;
  }

  std::vector<Node> nodes, nodes_p;
  std::vector<std::pair<std::string, std::string>> edges, edges_p;
  std::vector<std::string> psi, psi_prime;

  for (int i = 1; i <= j; ++i) {
    nodes.push_back({"i" + num(i), NodeRole::Input, ""});
    psi.push_back("i" + num(i));
    nodes_p.push_back({"i" + num(i) + "p", NodeRole::Input, ""});
    psi_prime.push_back("i" + num(i) + "p");
  }
  for (int o = 1; o <= k; ++o) {
    nodes.push_back({"o" + num(o), NodeRole::Output, ""});
    nodes_p.push_back({"o" + num(o) + "p", NodeRole::Output, ""});
  }

  MatchingSpec spec;
  spec.mode = MatchingMode::Explicit;

  for (int i = 1; i <= j; ++i) {
    for (int o = 1; o <= k; ++o) {
      std::string m = "m_" + num(i) + "_" + num(o);
      std::string phi = "phi_" + num(i) + "_" + num(o);
      std::string mp = "mp_" + num(i) + "_" + num(o);
      std::string phip = "phip_" + num(i) + "_" + num(o);
      bool done = complete.count({i, o}) > 0;

      // Input parent: every path starts; complete ones reach the output.
      // False inputs phi wire straight to the output.
      nodes.push_back({m, NodeRole::Intermediate, ""});
      nodes.push_back({phi, NodeRole::Intermediate, ""});
      psi.push_back(m);
      psi.push_back(phi);
      edges.emplace_back("i" + num(i), m);
      if (done) edges.emplace_back(m, "o" + num(o));
      edges.emplace_back(phi, "o" + num(o));

      // Output parent: paths exist exactly where the input parent's paths
      // are complete, so forward link counts stay equal. False outputs phip
      // wire straight from the input.
      nodes_p.push_back({phip, NodeRole::Intermediate, ""});
      edges_p.emplace_back("i" + num(i) + "p", phip);
      if (done) {
        nodes_p.push_back({mp, NodeRole::Intermediate, ""});
        edges_p.emplace_back("i" + num(i) + "p", mp);
        edges_p.emplace_back(mp, "o" + num(o) + "p");
      }

      // The informativeness-destroying pairing: real paths land on false
      // outputs, false inputs land on real paths (or spare false outputs).
      if (done) {
        spec.forward_pairs.push_back(
            {{m, "o" + num(o)}, {"i" + num(i) + "p", phip}});
        spec.forward_pairs.push_back(
            {{phi, "o" + num(o)}, {"i" + num(i) + "p", mp}});
      } else {
        spec.forward_pairs.push_back(
            {{phi, "o" + num(o)}, {"i" + num(i) + "p", phip}});
      }
    }
  }

  return assemble(IODGraph(std::move(nodes), edges), std::move(psi),
                  IODGraph(std::move(nodes_p), edges_p),
                  std::move(psi_prime), std::move(spec),
                  InformativenessLevel::Non);
}

ConstructionOutput build_theorem5_pair(int j) {
  if (j < 2) {
    throw Error(ErrorCode::InvalidArgument, "need j = k >= 2");
  }
  std::vector<Node> nodes, nodes_p;
  std::vector<std::pair<std::string, std::string>> edges, edges_p;
  std::vector<std::string> psi, psi_prime;
  for (int i = 1; i <= j; ++i) {
    nodes.push_back({"i" + num(i), NodeRole::Input, ""});
    psi.push_back("i" + num(i));
    nodes_p.push_back({"i" + num(i) + "p", NodeRole::Input, ""});
    psi_prime.push_back("i" + num(i) + "p");
    nodes.push_back({"o" + num(i), NodeRole::Output, ""});
    nodes_p.push_back({"o" + num(i) + "p", NodeRole::Output, ""});
  }
  // One private intermediate per (input, output) path on each side.
  for (int i = 1; i <= j; ++i) {
    for (int o = 1; o <= j; ++o) {
      std::string c = "c_" + num(i) + "_" + num(o);
      std::string cp = "cp_" + num(i) + "_" + num(o);
      nodes.push_back({c, NodeRole::Intermediate, ""});
      psi.push_back(c);
      edges.emplace_back("i" + num(i), c);
      edges.emplace_back(c, "o" + num(o));
      nodes_p.push_back({cp, NodeRole::Intermediate, ""});
      edges_p.emplace_back("i" + num(i) + "p", cp);
      edges_p.emplace_back(cp, "o" + num(o) + "p");
    }
  }
  // Round r marries input r to output r': every path out of input r is
  // spliced into a path into output r, collapsing r's fan-out onto one
  // output.
  MatchingSpec spec;
  spec.mode = MatchingMode::Explicit;
  for (int r = 1; r <= j; ++r) {
    for (int t = 1; t <= j; ++t) {
      spec.forward_pairs.push_back(
          {{"c_" + num(r) + "_" + num(t), "o" + num(t)},
           {"i" + num(t) + "p", "cp_" + num(t) + "_" + num(r)}});
    }
  }
  return assemble(IODGraph(std::move(nodes), edges), std::move(psi),
                  IODGraph(std::move(nodes_p), edges_p),
                  std::move(psi_prime), std::move(spec),
                  InformativenessLevel::Very);
}

CompetingConventionsPair build_competing_conventions_pair() {
  // Both parents map I1 to O1 and I2 to O2; the output parent routes
  // through the opposite intermediates (N4 serves O1, N3 serves O2).
  IODGraph a({{"I1", NodeRole::Input, ""},
              {"I2", NodeRole::Input, ""},
              {"N1", NodeRole::Intermediate, ""},
              {"N2", NodeRole::Intermediate, ""},
              {"O1", NodeRole::Output, ""},
              {"O2", NodeRole::Output, ""}},
             {{"I1", "N1"}, {"N1", "O1"}, {"I2", "N2"}, {"N2", "O2"}});
  IODGraph b({{"I1p", NodeRole::Input, ""},
              {"I2p", NodeRole::Input, ""},
              {"N3", NodeRole::Intermediate, ""},
              {"N4", NodeRole::Intermediate, ""},
              {"O1", NodeRole::Output, ""},
              {"O2", NodeRole::Output, ""}},
             {{"I1p", "N4"}, {"N4", "O1"}, {"I2p", "N3"}, {"N3", "O2"}});
  std::vector<std::string> psi = {"I1", "I2", "N1", "N2"};
  std::vector<std::string> psi_prime = {"I1p", "I2p"};

  MatchingSpec bad;
  bad.mode = MatchingMode::Explicit;
  bad.forward_pairs = {{{"N1", "O1"}, {"I2p", "N3"}},
                       {{"N2", "O2"}, {"I1p", "N4"}}};
  MatchingSpec good;
  good.mode = MatchingMode::Explicit;
  good.forward_pairs = {{{"N1", "O1"}, {"I1p", "N4"}},
                        {{"N2", "O2"}, {"I2p", "N3"}}};

  CompetingConventionsPair out;
  out.bad = assemble(a, psi, b, psi_prime, std::move(bad),
                     InformativenessLevel::Very);
  out.good = assemble(std::move(a), std::move(psi), std::move(b),
                      std::move(psi_prime), std::move(good),
                      InformativenessLevel::Very);
  return out;
}

ConstructionOutput build_non_to_fully_pair() {
  // Input parent reaches a blind alley; output parent's structure hangs off
  // nothing. The splice joins the loose ends into a working graph.
  IODGraph a({{"i", NodeRole::Input, ""},
              {"a", NodeRole::Intermediate, ""},
              {"o", NodeRole::Output, ""}},
             {{"i", "a"}});
  IODGraph b({{"ip", NodeRole::Input, ""},
              {"b", NodeRole::Intermediate, ""},
              {"op", NodeRole::Output, ""}},
             {{"b", "op"}});
  MatchingSpec spec;
  spec.mode = MatchingMode::Explicit;
  spec.forward_pairs = {{{"i", "a"}, {"b", "op"}}};
  return assemble(std::move(a), {"i"}, std::move(b), {"ip", "b"},
                  std::move(spec), InformativenessLevel::Fully);
}

}  // namespace iodg
