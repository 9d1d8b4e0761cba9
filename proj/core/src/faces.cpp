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

#include "georoute/faces.hpp"

#include <algorithm>
#include <stdexcept>

namespace georoute {

namespace {

std::size_t index_of(std::span<const VertexId> list, VertexId v) {
  const auto it = std::find(list.begin(), list.end(), v);
  return static_cast<std::size_t>(it - list.begin());
}

// Corner (prev, at, next) turns toward the inside of a face traversed with
// its interior on the left. Straight continuation counts as convex; a
// U-turn (dangling edge) does not.
bool convex_corner(const Point& prev, const Point& at, const Point& next, int side) {
  const Point in = at - prev;
  const Point out = next - at;
  const int turn = sign(cross(in, out));
  if (turn == 0) return sign(dot(in, out)) > 0;
  return turn == side;
}

}  // namespace

Rational twice_signed_area(const EmbeddedGraph& g, const std::vector<VertexId>& cycle) {
  Rational area = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point& a = g.point(cycle[i]);
    const Point& b = g.point(cycle[(i + 1) % cycle.size()]);
    area += cross(a, b);
  }
  return area;
}

FaceSet extract_faces(const EmbeddedGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("face extraction needs at least one edge");
  if (!g.is_connected()) throw std::invalid_argument("face extraction needs a connected graph");

  // Darts are indexed by (vertex, position in its rotation).
  std::vector<std::size_t> offset(g.vertex_count() + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + g.degree(v);
  std::vector<bool> used(offset.back(), false);

  FaceSet out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t i = 0; i < g.degree(u); ++i) {
      if (used[offset[u] + i]) continue;
      std::vector<VertexId> face;
      VertexId a = u;
      std::size_t ai = i;
      while (!used[offset[a] + ai]) {
        used[offset[a] + ai] = true;
        face.push_back(a);
        const VertexId b = g.neighbors(a)[ai];
        // Next dart leaves b toward the neighbor just before a in ccw order.
        const auto rot = g.neighbors(b);
        const std::size_t back = index_of(rot, a);
        const std::size_t next = (back + rot.size() - 1) % rot.size();
        a = b;
        ai = next;
      }
      if (a != u || ai != i) throw std::runtime_error("face trace did not close: non-planar");
      out.faces.push_back(std::move(face));
    }
  }

  const std::size_t expected =
      g.edge_count() + 2 - g.vertex_count();  // Euler, connected plane graph
  if (out.faces.size() != expected) {
    throw std::runtime_error("Euler's formula violated (" + std::to_string(out.faces.size()) +
                             " faces, expected " + std::to_string(expected) +
                             "): embedding is not planar");
  }

  std::optional<std::size_t> outer;
  for (std::size_t f = 0; f < out.faces.size(); ++f) {
    if (sign(twice_signed_area(g, out.faces[f])) < 0) {
      if (outer) throw std::runtime_error("more than one clockwise face: embedding is not planar");
      outer = f;
    }
  }
  if (!outer) {
    if (out.faces.size() != 1) throw std::runtime_error("no clockwise face found");
    outer = 0;  // a tree: the single face is unbounded
  }
  out.outer = *outer;
  return out;
}

ValidationReport check_plane_straight_line(const EmbeddedGraph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, d] = edges[j];
      const bool shares = a == c || a == d || b == c || b == d;
      if (!shares) {
        if (segments_intersect(g.point(a), g.point(b), g.point(c), g.point(d))) {
          return ValidationReport::fail("edges " + std::to_string(a) + "-" + std::to_string(b) +
                                            " and " + std::to_string(c) + "-" +
                                            std::to_string(d) + " intersect",
                                        std::nullopt, a);
        }
      }
      // Edges sharing an endpoint cannot overlap: add_edge rejects equal
      // directions at a vertex.
    }
  }
  return ValidationReport::pass();
}

ValidationReport validate_convex_subdivision(const EmbeddedGraph& g) {
  if (g.vertex_count() < 3) return ValidationReport::fail("fewer than three vertices");
  if (!g.is_connected()) return ValidationReport::fail("graph is not connected");
  if (auto plane = check_plane_straight_line(g); !plane) return plane;

  FaceSet faces;
  try {
    faces = extract_faces(g);
  } catch (const std::exception& e) {
    return ValidationReport::fail(e.what());
  }

  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& cycle = faces.faces[f];
    const bool is_outer = f == faces.outer;
    if (cycle.size() < 3) {
      return ValidationReport::fail("degenerate face with " + std::to_string(cycle.size()) +
                                        " darts",
                                    f, cycle.front());
    }
    const int side = is_outer ? -1 : 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const VertexId prev = cycle[(i + cycle.size() - 1) % cycle.size()];
      const VertexId at = cycle[i];
      const VertexId next = cycle[(i + 1) % cycle.size()];
      if (!convex_corner(g.point(prev), g.point(at), g.point(next), side)) {
        return ValidationReport::fail(
            is_outer ? "outer boundary is not convex at vertex " + std::to_string(at)
                     : "face " + std::to_string(f) + " is not convex at vertex " +
                           std::to_string(at),
            f, at);
      }
    }
  }
  return ValidationReport::pass();
}

ValidationReport validate_triangulation(const EmbeddedGraph& g) {
  if (auto convex = validate_convex_subdivision(g); !convex) return convex;
  const FaceSet faces = extract_faces(g);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (f == faces.outer) continue;
    if (faces.faces[f].size() != 3) {
      return ValidationReport::fail("face " + std::to_string(f) + " has " +
                                        std::to_string(faces.faces[f].size()) + " vertices",
                                    f, faces.faces[f].front());
    }
  }
  return ValidationReport::pass();
}

}  // namespace georoute
