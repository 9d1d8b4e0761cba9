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

#include "georoute/embedded_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace georoute {

namespace {

const Point kPositiveX{1, 0};

// Orders neighbor indices by ccw angle from `reference`; equal directions
// fall back to id so the choice is deterministic.
std::vector<std::size_t> sorted_from(const Point& from, const Point& reference,
                                     std::span<const Neighbor> neighbors) {
  const AngularLess less(reference);
  std::vector<std::size_t> order(neighbors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Point da = neighbors[a].point - from;
    const Point db = neighbors[b].point - from;
    if (less(da, db)) return true;
    if (less(db, da)) return false;
    return neighbors[a].id < neighbors[b].id;
  });
  return order;
}

bool on_open_ray(const Point& direction, const Point& d) {
  return sign(cross(direction, d)) == 0 && sign(dot(direction, d)) > 0;
}

void check_ray_args(const Point& from, const Point& toward, std::span<const Neighbor> neighbors) {
  if (neighbors.empty()) throw std::invalid_argument("isolated vertex has no neighbor to choose");
  if (from == toward) throw std::invalid_argument("ray is undefined when v coincides with t");
}

// Neighbor on the open ray, smallest id first.
std::optional<std::size_t> on_ray(const Point& from, const Point& toward,
                                  std::span<const Neighbor> neighbors) {
  const Point dir = toward - from;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    if (on_open_ray(dir, neighbors[i].point - from) &&
        (!best || neighbors[i].id < neighbors[*best].id)) {
      best = i;
    }
  }
  return best;
}

}  // namespace

std::size_t counterclockwise_from_ray(const Point& from, const Point& toward,
                                      std::span<const Neighbor> neighbors) {
  check_ray_args(from, toward, neighbors);
  if (auto hit = on_ray(from, toward, neighbors)) return *hit;
  return sorted_from(from, toward - from, neighbors).front();
}

std::size_t clockwise_from_ray(const Point& from, const Point& toward,
                               std::span<const Neighbor> neighbors) {
  check_ray_args(from, toward, neighbors);
  if (auto hit = on_ray(from, toward, neighbors)) return *hit;
  const auto order = sorted_from(from, toward - from, neighbors);
  // Largest ccw angle; among equal directions keep the smallest id.
  std::size_t pick = order.back();
  const AngularLess less(toward - from);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Point a = neighbors[*it].point - from;
    const Point b = neighbors[pick].point - from;
    if (less(a, b) || less(b, a)) break;
    pick = *it;
  }
  return pick;
}

void EmbeddedGraph::check_vertex(VertexId v) const {
  if (v >= points_.size()) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  }
}

VertexId EmbeddedGraph::add_vertex(Point p) {
  if (std::find(points_.begin(), points_.end(), p) != points_.end()) {
    throw std::invalid_argument("coincident vertex at " + to_string(p.x) + " " + to_string(p.y));
  }
  points_.push_back(std::move(p));
  adjacency_.emplace_back();
  return points_.size() - 1;
}

void EmbeddedGraph::insert_sorted(VertexId at, VertexId other) {
  auto& list = adjacency_[at];
  const AngularLess less(kPositiveX);
  const Point d = points_[other] - points_[at];
  auto pos = std::lower_bound(list.begin(), list.end(), d, [&](VertexId w, const Point& dir) {
    return less(points_[w] - points_[at], dir);
  });
  if (pos != list.end() && !less(d, points_[*pos] - points_[at])) {
    throw std::invalid_argument("edges " + std::to_string(at) + "-" + std::to_string(other) +
                                " and " + std::to_string(at) + "-" + std::to_string(*pos) +
                                " leave in the same direction");
  }
  list.insert(pos, other);
}

void EmbeddedGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  insert_sorted(u, v);
  try {
    insert_sorted(v, u);
  } catch (...) {
    auto& list = adjacency_[u];
    list.erase(std::find(list.begin(), list.end(), v));
    throw;
  }
  ++edge_count_;
}

void EmbeddedGraph::resort(VertexId v) {
  const AngularLess less(kPositiveX);
  auto& list = adjacency_[v];
  std::sort(list.begin(), list.end(), [&](VertexId a, VertexId b) {
    return less(points_[a] - points_[v], points_[b] - points_[v]);
  });
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (!less(points_[list[i - 1]] - points_[v], points_[list[i]] - points_[v])) {
      throw std::invalid_argument("moving vertex creates overlapping edges at " +
                                  std::to_string(v));
    }
  }
}

void EmbeddedGraph::move_vertex(VertexId v, Point p) {
  check_vertex(v);
  for (VertexId w = 0; w < points_.size(); ++w) {
    if (w != v && points_[w] == p) throw std::invalid_argument("move onto an existing vertex");
  }
  points_[v] = std::move(p);
  resort(v);
  for (VertexId w : adjacency_[v]) resort(w);
}

bool EmbeddedGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[u];
  return std::find(list.begin(), list.end(), v) != list.end();
}

std::vector<Neighbor> EmbeddedGraph::neighborhood(VertexId v) const {
  check_vertex(v);
  std::vector<Neighbor> out;
  out.reserve(adjacency_[v].size());
  for (VertexId w : adjacency_[v]) out.push_back({w, points_[w]});
  return out;
}

std::vector<std::pair<VertexId, VertexId>> EmbeddedGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool EmbeddedGraph::is_connected() const {
  if (points_.empty()) return true;
  std::vector<bool> seen(points_.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == points_.size();
}

void EmbeddedGraph::set_target(VertexId t) {
  check_vertex(t);
  target_ = t;
}

void EmbeddedGraph::set_source(VertexId s) {
  check_vertex(s);
  source_ = s;
}

VertexId ccw_neighbor(const EmbeddedGraph& g, VertexId v, const Point& t) {
  const auto nb = g.neighborhood(v);
  return nb[counterclockwise_from_ray(g.point(v), t, nb)].id;
}

VertexId cw_neighbor(const EmbeddedGraph& g, VertexId v, const Point& t) {
  const auto nb = g.neighborhood(v);
  return nb[clockwise_from_ray(g.point(v), t, nb)].id;
}

}  // namespace georoute
