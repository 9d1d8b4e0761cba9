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
#include <cstdint>
#include <span>
#include <vector>

#include "georoute/embedded_graph.hpp"

namespace georoute {

/// Brute-force exact Delaunay triangulation: keeps every triangle whose
/// circumcircle is empty of other input points. O(n^4); meant for test
/// fixtures of a few dozen points. Vertex ids follow input order.
///
/// Throws std::invalid_argument for fewer than three points, coincident
/// points, an all-collinear set, or four cocircular points whose circle is
/// otherwise empty (the triangulation would not be unique).
EmbeddedGraph delaunay(std::span<const Point> points);

/// `n` distinct integer points uniform in [0, extent)^2, drawn from `seed`.
std::vector<Point> random_points(std::size_t n, std::uint64_t seed, long extent = 1000);

/// Delaunay triangulation of random_points(n, seed'), where seed' is the
/// first of seed, seed + 1, ... whose points are in general enough position.
/// Target is set to vertex 0.
EmbeddedGraph random_delaunay(std::size_t n, std::uint64_t seed, long extent = 1000);

}  // namespace georoute
