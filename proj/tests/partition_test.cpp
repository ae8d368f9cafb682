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

#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "iodg/partition.hpp"
#include "support.hpp"

using namespace iodg;
using test::g;

namespace {

std::vector<std::string> names(const IODGraph& graph,
                               const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int v : idx) out.push_back(graph.node(v).id);
  return out;
}

IdEdge edge_ids(const IODGraph& graph, const IODGraph::Edge& e) {
  return {graph.node(e.first).id, graph.node(e.second).id};
}

}  // namespace

TEST_CASE("make_partition accepts psi = I and psi = N minus O") {
  auto graph = g({"i:i", "a", "o:o"}, {{"i", "a"}, {"a", "o"}});
  auto minimal = make_partition_ids(graph, {{"i"}});
  CHECK(names(graph, minimal.omega) == std::vector<std::string>{"a", "o"});
  auto maximal = make_partition_ids(graph, {{"i", "a"}});
  CHECK(names(graph, maximal.omega) == std::vector<std::string>{"o"});
}

TEST_CASE("make_partition rejects bad splits") {
  auto graph = g({"i:i", "a", "o:o"}, {{"i", "a"}, {"a", "o"}});
  CHECK_THROWS_AS(make_partition_ids(graph, {{"i", "o"}}), Error);
  CHECK_THROWS_AS(make_partition_ids(graph, {{"a"}}), Error);  // i missing
  CHECK_THROWS_AS(make_partition_ids(graph, {{"i", "ghost"}}), Error);
}

TEST_CASE("membrane of the worked example matches the quoted link sets") {
  auto w = test::worked_example();
  Membrane ma = membrane(w.g, w.pa);
  std::vector<IdEdge> fwd, bwd;
  for (const auto& e : ma.forward) fwd.push_back(edge_ids(w.g, e));
  for (const auto& e : ma.backward) bwd.push_back(edge_ids(w.g, e));
  CHECK(fwd == std::vector<IdEdge>{{"A", "C"}, {"D", "E"}, {"D", "O2"}});
  CHECK(bwd == std::vector<IdEdge>{{"C", "A"}});

  Membrane mb = membrane(w.gp, w.pb);
  fwd.clear();
  bwd.clear();
  for (const auto& e : mb.forward) fwd.push_back(edge_ids(w.gp, e));
  for (const auto& e : mb.backward) bwd.push_back(edge_ids(w.gp, e));
  CHECK(fwd == std::vector<IdEdge>{{"I3p", "Y"}, {"V", "X"}, {"W", "Y"}});
  CHECK(bwd == std::vector<IdEdge>{{"X", "W"}});
}

TEST_CASE("membrane simple cases") {
  auto direct = g({"i:i", "o:o"}, {{"i", "o"}});
  Membrane m = membrane(direct, make_partition_ids(direct, {{"i"}}));
  CHECK(m.forward.size() == 1);
  CHECK(m.backward.empty());

  auto split = g({"i:i", "a", "b", "o:o"}, {{"i", "a"}, {"b", "o"}});
  Membrane empty_m =
      membrane(split, make_partition_ids(split, {{"i", "a"}}));
  CHECK(empty_m.forward.empty());
  CHECK(empty_m.backward.empty());
}

TEST_CASE("contiguity basics") {
  auto graph = g({"i:i", "a", "o:o"}, {{"i", "a"}, {"a", "o"}});
  auto psi_inputs = make_partition_ids(graph, {{"i"}});
  CHECK(is_input_contiguous(graph, psi_inputs));  // psi \ I empty
  CHECK(is_output_contiguous(graph, psi_inputs));

  // Omega holds a node with no route to an output inside omega.
  auto fig6ish = g({"i:i", "a", "C", "o:o"},
                   {{"i", "a"}, {"a", "C"}, {"a", "o"}});
  auto part = make_partition_ids(fig6ish, {{"i", "a"}});
  CHECK(is_input_contiguous(fig6ish, part));
  CHECK_FALSE(is_output_contiguous(fig6ish, part));

  // An intermediate in psi fed only from omega.
  auto back_fed = g({"i:i", "m", "x", "o:o"},
                    {{"i", "x"}, {"x", "m"}, {"m", "o"}, {"x", "o"}});
  auto part2 = make_partition_ids(back_fed, {{"i", "m"}});
  CHECK_FALSE(is_input_contiguous(back_fed, part2));

  auto tail = g({"i:i", "a", "o:o"}, {{"i", "a"}, {"a", "o"}});
  CHECK(is_output_contiguous(tail, make_partition_ids(tail, {{"i"}})));
}

TEST_CASE("worked-example partitions are contiguous") {
  auto w = test::worked_example();
  CHECK(is_input_contiguous(w.g, w.pa));
  CHECK(is_output_contiguous(w.g, w.pa));
  CHECK(is_input_contiguous(w.gp, w.pb));
  CHECK(is_output_contiguous(w.gp, w.pb));
}

TEST_CASE("enumeration counts and order") {
  auto graph = g({"i:i", "o:o", "a", "b", "c", "d"},
                 {{"i", "a"}, {"a", "b"}, {"b", "o"}, {"c", "d"}});
  CHECK(count_partitions(graph, PartitionFilter::All) == 16);

  auto none = g({"i:i", "o:o"}, {{"i", "o"}});
  CHECK(count_partitions(none, PartitionFilter::All) == 1);

  // Lexicographic membership order over intermediates {a, b}.
  auto two = g({"i:i", "o:o", "a", "b"}, {{"i", "a"}, {"b", "o"}});
  std::vector<std::vector<std::string>> seen;
  for_each_partition(two, PartitionFilter::All, [&](const IOPartition& p) {
    std::vector<std::string> mids;
    for (int v : p.psi) {
      if (two.node(v).role == NodeRole::Intermediate)
        mids.push_back(two.node(v).id);
    }
    seen.push_back(mids);
    return true;
  });
  CHECK(seen == std::vector<std::vector<std::string>>{
                    {}, {"b"}, {"a"}, {"a", "b"}});
}

TEST_CASE("early stop works") {
  auto graph = g({"i:i", "o:o", "a", "b", "c"}, {{"i", "o"}});
  int calls = 0;
  for_each_partition(graph, PartitionFilter::All, [&](const IOPartition&) {
    return ++calls < 3;
  });
  CHECK(calls == 3);
}

TEST_CASE("count law and filter agreement on random graphs") {
  Rng rng(1001);
  for (int trial = 0; trial < 120; ++trial) {
    IODGraph graph = test::random_graph(rng);
    if (!validate(graph).ok) continue;
    std::uint64_t m = graph.intermediate_indices().size();
    CHECK(count_partitions(graph, PartitionFilter::All) == (1ull << m));

    std::uint64_t oracle_in = 0, oracle_out = 0, oracle_both = 0;
    for_each_partition(graph, PartitionFilter::All, [&](const IOPartition& p) {
      bool ic = is_input_contiguous(graph, p);
      bool oc = is_output_contiguous(graph, p);
      bool oic = test::oracle_input_contiguous(graph, p);
      bool ooc = test::oracle_output_contiguous(graph, p);
      CHECK(ic == oic);
      CHECK(oc == ooc);
      oracle_in += oic;
      oracle_out += ooc;
      oracle_both += oic && ooc;

      // Membrane edges are exactly the straddling edges; F and B split them.
      Membrane mem = membrane(graph, p);
      std::set<IODGraph::Edge> cut(mem.forward.begin(), mem.forward.end());
      for (const auto& e : mem.backward) {
        CHECK(cut.insert(e).second);  // forward and backward are disjoint
      }
      for (const auto& e : graph.edges()) {
        bool straddles = p.in_psi(e.first) != p.in_psi(e.second);
        CHECK(straddles == (cut.count(e) > 0));
      }
      return true;
    });
    CHECK(count_partitions(graph, PartitionFilter::InputContiguous) ==
          oracle_in);
    CHECK(count_partitions(graph, PartitionFilter::OutputContiguous) ==
          oracle_out);
    CHECK(count_partitions(graph, PartitionFilter::Contiguous) == oracle_both);
  }
}

TEST_CASE("count law at twelve and sixteen intermediates") {
  std::vector<std::string> nodes = {"i:i", "o:o"};
  std::vector<std::pair<std::string, std::string>> edges = {{"i", "o"}};
  for (int v = 0; v < 12; ++v) nodes.push_back("m" + std::to_string(v));
  auto graph = g(nodes, edges);
  CHECK(count_partitions(graph, PartitionFilter::All) == 4096);

  for (int v = 12; v < 16; ++v) nodes.push_back("m" + std::to_string(v));
  auto wide = g(nodes, edges);
  CHECK(count_partitions(wide, PartitionFilter::All) == 65536);
}

TEST_CASE("layer-respecting enumeration keeps layers whole") {
  IODGraph net = test::perceptron({2, 3, 2, 2});
  std::unordered_map<std::string, int> layers;
  for (const Node& n : net.nodes()) {
    layers[n.id] = n.id[1] - '0';  // "l<layer>_<index>"
  }
  std::uint64_t count = 0;
  for_each_partition(
      net, PartitionFilter::LayerRespecting,
      [&](const IOPartition& p) {
        ++count;
        for (const Node& n : net.nodes()) {
          int v = net.require_index(n.id);
          for (const Node& other : net.nodes()) {
            if (layers[n.id] == layers[other.id]) {
              CHECK(p.in_psi(v) == p.in_psi(net.require_index(other.id)));
            }
          }
        }
        return true;
      },
      &layers);
  CHECK(count == 4);  // two free intermediate layers

  std::unordered_map<std::string, int> incomplete;
  CHECK_THROWS_AS(count_partitions(net, PartitionFilter::LayerRespecting,
                                   &incomplete),
                  Error);
}
