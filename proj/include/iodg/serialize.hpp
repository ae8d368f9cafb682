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

#ifndef IODG_SERIALIZE_HPP_
#define IODG_SERIALIZE_HPP_

#include <string>

#include "iodg/graph.hpp"

namespace iodg {

inline constexpr int kFormatVersion = 1;

/// Canonical JSON:
///   {"format_version":1,
///    "nodes":[{"id":..,"role":"input"|"output"|"intermediate","tag":..?},..],
///    "edges":[[src,dst],..]}
/// Nodes and edges are emitted in lexicographic order, so serialization is a
/// canonical form: parse(to_json(g)) == g and to_json is idempotent over
/// round-trips.
std::string to_json(const IODGraph& graph);

/// Parses the JSON graph format. Errors carry the parser's byte position.
/// "format_version" and "tag" are optional on input.
IODGraph graph_from_json(const std::string& text);

/// DOT export: inputs as boxes, outputs as double circles, intermediates as
/// circles; node tag carried as a plain attribute. Same canonical ordering
/// as the JSON form.
std::string to_dot(const IODGraph& graph);

/// Parses the canonical DOT emitted by to_dot (one statement per line).
/// This is a reader for our own exports, not a general DOT parser.
IODGraph graph_from_dot(const std::string& text);

/// Reads a graph from a file, dispatching on extension (.dot vs JSON).
/// Path "-" reads JSON from stdin.
IODGraph load_graph(const std::string& path);

}  // namespace iodg

#endif  // IODG_SERIALIZE_HPP_
