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
#include <span>
#include <utility>
#include <vector>

#include "georoute/point.hpp"

namespace georoute {

using VertexId = std::size_t;

/// A neighbor as seen from a vertex: its id and its coordinates.
struct Neighbor {
  VertexId id;
  Point point;
};

/// Index into `neighbors` of the first neighbor met when rotating
/// counterclockwise from the ray `from -> toward`. A neighbor lying on the
/// open ray is returned by both this and `clockwise_from_ray`. Ties on
/// identical directions resolve to the smaller id.
/// Throws std::invalid_argument if `neighbors` is empty or from == toward.
std::size_t counterclockwise_from_ray(const Point& from, const Point& toward,
                                      std::span<const Neighbor> neighbors);
std::size_t clockwise_from_ray(const Point& from, const Point& toward,
                               std::span<const Neighbor> neighbors);

/// Straight-line graph with exact coordinates and a rotation system: every
/// adjacency list is kept in strict counterclockwise order of direction,
/// starting from the positive x axis.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// Ids are assigned densely from 0. Coincident points are rejected.
  VertexId add_vertex(Point p);
  /// Rejects loops, parallel edges and a second neighbor in an already
  /// occupied direction (overlapping collinear edges).
  void add_edge(VertexId u, VertexId v);
  /// Moves a vertex and re-sorts the affected rotations. Used to build
  /// perturbed variants of generated instances.
  void move_vertex(VertexId v, Point p);

  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const Point& point(VertexId v) const { return points_.at(v); }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// Neighbors of v with coordinates, in rotation order.
  std::vector<Neighbor> neighborhood(VertexId v) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  bool is_connected() const;

  std::optional<VertexId> target() const { return target_; }
  void set_target(VertexId t);
  std::optional<VertexId> source() const { return source_; }
  void set_source(VertexId s);

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  void check_vertex(VertexId v) const;
  void insert_sorted(VertexId at, VertexId other);
  void resort(VertexId v);

  std::vector<Point> points_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::optional<VertexId> target_;
  std::optional<VertexId> source_;
};

/// ccw_t(v) / cw_t(v) on a graph, with t given as a point.
VertexId ccw_neighbor(const EmbeddedGraph& g, VertexId v, const Point& t);
VertexId cw_neighbor(const EmbeddedGraph& g, VertexId v, const Point& t);

}  // namespace georoute
