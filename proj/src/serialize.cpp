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

#include "iodg/serialize.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace iodg {

namespace {
using json = nlohmann::ordered_json;
}

std::string to_json(const IODGraph& graph) {
  json j;
  j["format_version"] = kFormatVersion;
  j["nodes"] = json::array();
  for (const Node& n : graph.nodes()) {
    json jn;
    jn["id"] = n.id;
    jn["role"] = std::string(to_string(n.role));
    if (!n.tag.empty()) jn["tag"] = n.tag;
    j["nodes"].push_back(std::move(jn));
  }
  j["edges"] = json::array();
  for (const auto& [src, dst] : graph.edges()) {
    j["edges"].push_back({graph.node(src).id, graph.node(dst).id});
  }
  return j.dump(2) + "\n";
}

IODGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges")) {
      throw Error(ErrorCode::Parse,
                  "graph JSON must be an object with \"nodes\" and \"edges\"");
    }
    std::vector<Node> nodes;
    for (const auto& jn : j.at("nodes")) {
      Node n;
      n.id = jn.at("id").get<std::string>();
      n.role = role_from_string(jn.at("role").get<std::string>());
      if (jn.contains("tag")) n.tag = jn.at("tag").get<std::string>();
      nodes.push_back(std::move(n));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2) {
        throw Error(ErrorCode::Parse, "edge entries must be [src, dst] pairs");
      }
      edges.emplace_back(je[0].get<std::string>(), je[1].get<std::string>());
    }
    return IODGraph(std::move(nodes), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
  }
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string_view role_shape(NodeRole role) {
  switch (role) {
    case NodeRole::Input:
      return "box";
    case NodeRole::Output:
      return "doublecircle";
    case NodeRole::Intermediate:
      return "circle";
  }
  return "circle";
}

NodeRole role_from_shape(std::string_view shape) {
  if (shape == "box") return NodeRole::Input;
  if (shape == "doublecircle") return NodeRole::Output;
  if (shape == "circle") return NodeRole::Intermediate;
  throw Error(ErrorCode::Parse, "DOT: unknown shape " + std::string(shape));
}

}  // namespace

std::string to_dot(const IODGraph& graph) {
  std::ostringstream out;
  out << "digraph iod {\n";
  for (const Node& n : graph.nodes()) {
    out << "  " << dot_quote(n.id) << " [shape=" << role_shape(n.role);
    if (!n.tag.empty()) out << ", tag=" << dot_quote(n.tag);
    out << "];\n";
  }
  for (const auto& [src, dst] : graph.edges()) {
    out << "  " << dot_quote(graph.node(src).id) << " -> "
        << dot_quote(graph.node(dst).id) << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

// Minimal tokenizer for the canonical DOT grammar emitted above.
struct DotScanner {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') ++line;
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::Parse,
                "DOT line " + std::to_string(line) + ": " + what);
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!eat(token)) fail("expected '" + std::string(token) + "'");
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  std::string name() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '"') {
      ++pos;
      std::string out;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
        out += text[pos++];
      }
      if (pos >= text.size()) fail("unterminated quoted id");
      ++pos;
      return out;
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) fail("expected identifier");
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

IODGraph graph_from_dot(const std::string& text) {
  DotScanner s{text};
  s.expect("digraph");
  s.name();  // graph name, ignored
  s.expect("{");
  std::vector<Node> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (;;) {
    if (s.eat("}")) break;
    std::string first = s.name();
    if (s.eat("->")) {
      std::string second = s.name();
      s.expect(";");
      edges.emplace_back(std::move(first), std::move(second));
      continue;
    }
    s.expect("[");
    Node n;
    n.id = std::move(first);
    bool have_shape = false;
    for (;;) {
      std::string key = s.name();
      s.expect("=");
      std::string value = s.name();
      if (key == "shape") {
        n.role = role_from_shape(value);
        have_shape = true;
      } else if (key == "tag") {
        n.tag = value;
      } else {
        s.fail("unknown node attribute '" + key + "'");
      }
      if (s.eat(",")) continue;
      break;
    }
    s.expect("]");
    s.expect(";");
    if (!have_shape) s.fail("node statement missing shape attribute");
    nodes.push_back(std::move(n));
  }
  return IODGraph(std::move(nodes), edges);
}

IODGraph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".dot") {
    return graph_from_dot(text);
  }
  return graph_from_json(text);
}

}  // namespace iodg
