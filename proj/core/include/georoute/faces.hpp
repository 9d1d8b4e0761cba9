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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "georoute/embedded_graph.hpp"

namespace georoute {

/// Faces traced through the rotation system. Bounded faces come out
/// counterclockwise; the outer face is the unique clockwise one.
struct FaceSet {
  std::vector<std::vector<VertexId>> faces;
  std::size_t outer = 0;

  std::size_t size() const { return faces.size(); }
};

/// Twice the signed area of a closed vertex cycle.
Rational twice_signed_area(const EmbeddedGraph& g, const std::vector<VertexId>& cycle);

/// Throws std::invalid_argument if g is disconnected or has no edges, and
/// std::runtime_error if the trace is inconsistent with a plane embedding.
FaceSet extract_faces(const EmbeddedGraph& g);

/// Report-style verdict of the validators.
struct ValidationReport {
  bool ok = true;
  std::string message;
  std::optional<std::size_t> face;
  std::optional<VertexId> vertex;

  explicit operator bool() const { return ok; }

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string why, std::optional<std::size_t> face = std::nullopt,
                               std::optional<VertexId> vertex = std::nullopt) {
    return {false, std::move(why), face, vertex};
  }
};

/// Edges may meet only at shared endpoints. O(E^2) exact check.
ValidationReport check_plane_straight_line(const EmbeddedGraph& g);

/// Connected plane straight-line graph whose bounded faces are convex
/// (interior angles <= 180 deg, collinear boundary vertices allowed) and whose
/// outer face is the complement of a convex polygon.
ValidationReport validate_convex_subdivision(const EmbeddedGraph& g);

/// Convex subdivision whose bounded faces are all 3-cycles.
ValidationReport validate_triangulation(const EmbeddedGraph& g);

}  // namespace georoute
