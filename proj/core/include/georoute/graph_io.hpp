// Copyright 2026 The georoute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>

#include "georoute/embedded_graph.hpp"

namespace georoute {

/// Text format:
///
///   geomgraph 1
///   V <count>
///   <id> <x> <y>        x, y integers or p/q; ids 0-based
///   E <count>
///   <u> <v>
///   S <id>              optional designated source
///   T <id>              optional target
///
/// Whitespace separated; lines whose first token starts with '#' are
/// comments. The writer emits vertices by id, edges sorted with u < v.
void write_graph(std::ostream& os, const EmbeddedGraph& g);
std::string write_graph(const EmbeddedGraph& g);

/// Throws std::runtime_error naming the offending line on malformed input.
EmbeddedGraph read_graph(std::istream& is);
EmbeddedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const EmbeddedGraph& g);

}  // namespace georoute
