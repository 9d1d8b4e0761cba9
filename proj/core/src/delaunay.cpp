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

#include "georoute/delaunay.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "georoute/rng.hpp"

namespace georoute {

EmbeddedGraph delaunay(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw std::invalid_argument("delaunay needs at least three points");
  if (std::set<Point>(points.begin(), points.end()).size() != n) {
    throw std::invalid_argument("delaunay input has coincident points");
  }

  std::set<std::pair<std::size_t, std::size_t>> edges;
  bool any_triangle = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::size_t a = i, b = j, c = k;
        const auto o = orientation(points[a], points[b], points[c]);
        if (o == Orientation::Collinear) continue;
        if (o == Orientation::Right) std::swap(b, c);
        bool empty = true;
        bool cocircular = false;
        for (std::size_t m = 0; m < n && empty; ++m) {
          if (m == a || m == b || m == c) continue;
          const int s = in_circle(points[a], points[b], points[c], points[m]);
          if (s > 0) empty = false;
          if (s == 0) cocircular = true;
        }
        if (!empty) continue;
        if (cocircular) {
          throw std::invalid_argument("delaunay input has four cocircular points");
        }
        any_triangle = true;
        edges.emplace(std::min(a, b), std::max(a, b));
        edges.emplace(std::min(b, c), std::max(b, c));
        edges.emplace(std::min(a, c), std::max(a, c));
      }
    }
  }
  if (!any_triangle) throw std::invalid_argument("delaunay input is collinear");

  EmbeddedGraph g;
  for (const Point& p : points) g.add_vertex(p);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<Point> random_points(std::size_t n, std::uint64_t seed, long extent) {
  if (extent < 2) throw std::invalid_argument("extent must be at least 2");
  if (static_cast<double>(n) > static_cast<double>(extent) * static_cast<double>(extent)) {
    throw std::invalid_argument("more points than grid cells");
  }
  RngStream rng(seed);
  std::set<std::pair<long, long>> seen;
  std::vector<Point> points;
  while (points.size() < n) {
    const long x = static_cast<long>(rng.word() % static_cast<std::uint64_t>(extent));
    const long y = static_cast<long>(rng.word() % static_cast<std::uint64_t>(extent));
    if (seen.emplace(x, y).second) points.emplace_back(x, y);
  }
  return points;
}

EmbeddedGraph random_delaunay(std::size_t n, std::uint64_t seed, long extent) {
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    try {
      EmbeddedGraph g = delaunay(random_points(n, seed + attempt, extent));
      g.set_target(0);
      return g;
    } catch (const std::invalid_argument&) {
      // degenerate draw; try the next seed
    }
  }
  throw std::runtime_error("no non-degenerate point set after 1000 draws");
}

}  // namespace georoute
