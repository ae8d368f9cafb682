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

#include "iodg/serialize.hpp"
#include "support.hpp"

using namespace iodg;
using test::g;

TEST_CASE("json round trip is exact and idempotent") {
  auto graph = g({"i1:i", "i2:i", "o:o", "a:tag=water", "b"},
                 {{"i1", "a"}, {"a", "b"}, {"b", "o"}, {"i2", "o"}});
  std::string text = to_json(graph);
  IODGraph back = graph_from_json(text);
  CHECK(back == graph);
  CHECK(to_json(back) == text);
}

TEST_CASE("json parse errors carry position info") {
  CHECK_THROWS_WITH_AS(graph_from_json("{\"nodes\": [}"),
                       doctest::Contains("parse error"), Error);
  try {
    graph_from_json("not json at all");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("json rejects structural garbage") {
  CHECK_THROWS_AS(graph_from_json("{\"nodes\": [], \"edges\": [[\"a\"]]}"),
                  Error);
  CHECK_THROWS_AS(graph_from_json("[1,2,3]"), Error);
  CHECK_THROWS_AS(
      graph_from_json(
          "{\"nodes\":[{\"id\":\"x\",\"role\":\"wizard\"}],\"edges\":[]}"),
      Error);
}

TEST_CASE("dot export shapes encode roles") {
  auto graph = g({"i:i", "o:o", "a"}, {{"i", "a"}, {"a", "o"}});
  std::string dot = to_dot(graph);
  CHECK(dot.find("\"i\" [shape=box]") != std::string::npos);
  CHECK(dot.find("\"o\" [shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("\"a\" [shape=circle]") != std::string::npos);
  CHECK(dot.find("\"i\" -> \"a\";") != std::string::npos);
}

TEST_CASE("dot round trip is exact and idempotent") {
  auto graph = g({"i'1:i", "o 1:o", "a:tag=gas"}, {{"i'1", "a"}, {"a", "o 1"}});
  std::string dot = to_dot(graph);
  IODGraph back = graph_from_dot(dot);
  CHECK(back == graph);
  CHECK(to_dot(back) == dot);
}

TEST_CASE("round trips hold for random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IODGraph graph = test::random_graph(rng);
    CHECK(graph_from_json(to_json(graph)) == graph);
    CHECK(graph_from_dot(to_dot(graph)) == graph);
  }
}
