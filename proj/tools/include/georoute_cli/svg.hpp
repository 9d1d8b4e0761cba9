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

#include <optional>
#include <string>
#include <vector>

#include "georoute/embedded_graph.hpp"

namespace georoute::cli {

struct SvgOptions {
  double width = 640;  // drawing area, margins excluded
  double margin = 24;
  double vertex_radius = 3;
  bool label_vertices = false;
};

/// SVG 1.1 drawing: one <line> per edge, one <circle> per vertex (the
/// target filled red, the source green), and, for a trace, a <polyline>
/// through its vertices plus a step-count <text>. Coordinates are printed
/// with three decimals, so output bytes depend only on the inputs.
std::string render_svg(const EmbeddedGraph& g,
                       const std::optional<std::vector<VertexId>>& trace = std::nullopt,
                       const SvgOptions& options = {});

}  // namespace georoute::cli
