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

#include "georoute/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace georoute {

// ---------------------------------------------------------------------------
// Rotations

Point RationalRotation::apply(const Point& p) const {
  return {cos * p.x - sin * p.y, sin * p.x + cos * p.y};
}

namespace {

// tan(60 deg) ~ 26/15 gives the triple 451^2 + 780^2 = 901^2; the rotation
// is off by about 0.037 deg.
RationalRotation rotation_120() { return {120, Rational(-451, 901), Rational(780, 901)}; }

RationalRotation compose(const RationalRotation& a, const RationalRotation& b, int degrees) {
  return {degrees, a.cos * b.cos - a.sin * b.sin, a.sin * b.cos + a.cos * b.sin};
}

RationalRotation negate(const RationalRotation& r, int degrees) {
  return {degrees, -r.cos, -r.sin};
}

}  // namespace

RationalRotation rational_rotation(int degrees) {
  const int d = ((degrees % 360) + 360) % 360;
  switch (d) {
    case 0:
      return {0, 1, 0};
    case 90:
      return {90, 0, 1};
    case 180:
      return {180, -1, 0};
    case 270:
      return {270, 0, -1};
    case 120:
      return rotation_120();
    case 240:
      return compose(rotation_120(), rotation_120(), 240);
    case 300:
      return negate(rotation_120(), 300);
    case 60:
      return negate(compose(rotation_120(), rotation_120(), 240), 60);
    default:
      throw std::invalid_argument("unsupported rotation angle " + std::to_string(degrees) +
                                  " (use multiples of 60 or 90)");
  }
}

// ---------------------------------------------------------------------------
// Trap

namespace {

// Arm 0 before rotation: vertex h at (2 m h, -(m - h)) with m = k + 1. The
// arm is a straight segment aimed slightly past t on the side of the
// previous arm, so the inward neighbor is always the first one met rotating
// toward that side, and the next arm's outer endpoint the first one met on
// the other side.
Point arm_point(std::size_t h, std::size_t m) {
  const long lm = static_cast<long>(m);
  const long lh = static_cast<long>(h);
  return {2 * lm * lh, -(lm - lh)};
}

}  // namespace

TrapInstance build_bad_unbiased(std::size_t k, std::size_t paths) {
  if (k < 1) throw std::invalid_argument("trap needs k >= 1");
  if (paths != 3 && paths != 4) throw std::invalid_argument("trap supports 3 or 4 paths");
  const std::size_t m = k + 1;
  const RationalRotation step = rational_rotation(paths == 4 ? 90 : 120);

  TrapInstance trap;
  trap.k = k;
  trap.paths = paths;
  auto& g = trap.graph;
  trap.target = g.add_vertex(Point{0, 0});

  RationalRotation rot = rational_rotation(0);
  for (std::size_t j = 0; j < paths; ++j) {
    std::vector<VertexId> arm;
    for (std::size_t h = 1; h <= m; ++h) arm.push_back(g.add_vertex(rot.apply(arm_point(h, m))));
    trap.arms.push_back(std::move(arm));
    rot = compose(rot, step, rot.degrees + step.degrees);
  }

  for (std::size_t j = 0; j < paths; ++j) {
    const auto& arm = trap.arms[j];
    const auto& next = trap.arms[(j + 1) % paths];
    g.add_edge(trap.target, arm.front());
    for (std::size_t h = 0; h + 1 < m; ++h) g.add_edge(arm[h], arm[h + 1]);
    g.add_edge(arm.back(), next.back());
    // Fan from the next arm's outer endpoint over this arm ...
    for (std::size_t h = 0; h + 1 < m; ++h) g.add_edge(arm[h], next.back());
    // ... and from this arm's innermost vertex over the next arm.
    for (std::size_t h = 0; h + 1 < m; ++h) g.add_edge(arm.front(), next[h]);
  }

  trap.source = trap.arms.front().back();
  g.set_source(trap.source);
  g.set_target(trap.target);

  if (auto tri = validate_triangulation(g); !tri) {
    throw std::logic_error("trap is not a triangulation: " + tri.message);
  }
  if (auto structure = check_trap_structure(g, trap.target); !structure) {
    throw std::logic_error("trap structure broken: " + structure.message);
  }
  return trap;
}

ValidationReport check_trap_structure(const EmbeddedGraph& g, VertexId t) {
  if (g.degree(t) == 0) return ValidationReport::fail("target is isolated", std::nullopt, t);
  FaceSet faces;
  try {
    faces = extract_faces(g);
  } catch (const std::exception& e) {
    return ValidationReport::fail(e.what());
  }
  const auto& outer_cycle = faces.faces[faces.outer];
  const std::set<VertexId> outer(outer_cycle.begin(), outer_cycle.end());
  const Point& tp = g.point(t);
  const std::size_t n = g.vertex_count();

  std::vector<std::optional<VertexId>> inward(n);
  for (VertexId v = 0; v < n; ++v) {
    if (v == t) continue;
    if (g.degree(v) == 0) return ValidationReport::fail("isolated vertex", std::nullopt, v);
    const VertexId cw = cw_neighbor(g, v, tp);
    const VertexId ccw = ccw_neighbor(g, v, tp);
    const std::string where = "vertex " + std::to_string(v);
    if (g.has_edge(v, t)) {
      if (cw != t || ccw != t) {
        return ValidationReport::fail(where + " is adjacent to t but does not step to it",
                                      std::nullopt, v);
      }
      continue;
    }
    if (cw == ccw) {
      return ValidationReport::fail(where + " has a single Random-Compass option", std::nullopt,
                                    v);
    }
    const bool cw_outer = outer.count(cw) > 0;
    const bool ccw_outer = outer.count(ccw) > 0;
    if (cw_outer == ccw_outer) {
      return ValidationReport::fail(
          where + (cw_outer ? " has two outer options" : " has no outer-face option"),
          std::nullopt, v);
    }
    inward[v] = cw_outer ? ccw : cw;
  }

  // Depth along arms; following inward pointers must reach t's neighbors.
  std::vector<std::size_t> depth(n, 0);
  std::vector<std::size_t> in_degree(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (inward[v]) ++in_degree[*inward[v]];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v == t) continue;
    std::size_t d = 1;
    VertexId at = v;
    while (inward[at]) {
      at = *inward[at];
      if (++d > n) {
        return ValidationReport::fail("inward steps from vertex " + std::to_string(v) + " cycle",
                                      std::nullopt, v);
      }
    }
    depth[v] = d;
    if (in_degree[v] > 1) {
      return ValidationReport::fail("vertex " + std::to_string(v) + " is the inward step of " +
                                        std::to_string(in_degree[v]) + " vertices",
                                    std::nullopt, v);
    }
    if (in_degree[v] == 0 && outer.count(v) == 0) {
      return ValidationReport::fail("vertex " + std::to_string(v) +
                                        " starts an arm but is not on the outer face",
                                    std::nullopt, v);
    }
  }
  std::optional<std::size_t> arm_length;
  for (VertexId v : outer) {
    if (v == t) return ValidationReport::fail("t lies on the outer face", std::nullopt, t);
    if (in_degree[v] != 0) {
      return ValidationReport::fail("outer vertex " + std::to_string(v) + " is not an arm end",
                                    std::nullopt, v);
    }
    if (!arm_length) arm_length = depth[v];
    if (depth[v] != *arm_length) {
      return ValidationReport::fail("outer vertex " + std::to_string(v) + " has depth " +
                                        std::to_string(depth[v]) + ", expected " +
                                        std::to_string(*arm_length),
                                    std::nullopt, v);
    }
  }
  if (outer.size() != g.degree(t)) {
    return ValidationReport::fail("number of arms differs from the degree of t");
  }
  return ValidationReport::pass();
}

// ---------------------------------------------------------------------------
// Chains

const char* to_string(Variant v) { return v == Variant::A ? "A" : "B"; }

std::string ChainInstance::label() const {
  return std::string(to_string(variant)) + "(" + std::to_string(rotation.degrees) + ")";
}

bool angle_in_150_180(const Point& a, const Point& b, const Point& c) {
  const Point u = a - b;
  const Point w = c - b;
  const Rational d = dot(u, w);
  if (sign(d) >= 0) return false;
  if (orientation(a, b, c) == Orientation::Collinear) return false;  // 180 exactly
  // cos^2 > 3/4 with cos < 0  <=>  angle in (150, 180)
  return 4 * d * d > 3 * squared_norm(u) * squared_norm(w);
}

ChainInstance build_chain(Variant variant, int alpha_degrees, std::size_t k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("chain length k must be even and >= 4");
  ChainInstance c;
  c.variant = variant;
  c.rotation = rational_rotation(alpha_degrees);
  // A(0): a_i = (-(4 + k - i), -1), so a_k = (-4, -1) and the angle at a_k
  // is 180 - atan(1/4) ~ 166 deg. B(0) mirrors it across the x axis.
  const long mirror = variant == Variant::A ? -1 : 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const long x = -(4 + static_cast<long>(k - i));
    c.points.push_back(c.rotation.apply(Point{x, mirror}));
  }
  if (auto ok = check_chain_invariants(c); !ok) {
    throw std::logic_error("chain " + c.label() + " violates its invariants: " + ok.message);
  }
  return c;
}

ValidationReport check_chain_invariants(const ChainInstance& c) {
  const std::size_t k = c.k();
  if (k < 2) return ValidationReport::fail("chain has fewer than two vertices");
  const Point& first = c.points.front();
  const Point& last = c.points.back();
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (orientation(first, last, c.points[i]) != Orientation::Collinear ||
        !on_segment(first, last, c.points[i])) {
      return ValidationReport::fail("a_" + std::to_string(i + 1) + " is off the chain line",
                                    std::nullopt, i);
    }
  }
  const Rational closest = squared_distance(last, c.target);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (squared_distance(c.points[i], c.target) <= closest) {
      return ValidationReport::fail("a_k is not strictly closest to t", std::nullopt, i);
    }
  }
  const Orientation expected = c.variant == Variant::A ? Orientation::Left : Orientation::Right;
  if (orientation(first, last, c.target) != expected) {
    return ValidationReport::fail(std::string("a_1, a_k, t should turn ") + to_string(expected));
  }
  if (!angle_in_150_180(first, last, c.target)) {
    return ValidationReport::fail("angle a_1 a_k t is not strictly between 150 and 180 degrees");
  }
  return ValidationReport::pass();
}

EmbeddedGraph chain_graph(const ChainInstance& c) {
  EmbeddedGraph g;
  for (const auto& p : c.points) g.add_vertex(p);
  const VertexId t = g.add_vertex(c.target);
  for (VertexId i = 0; i + 1 < c.k(); ++i) g.add_edge(i, i + 1);
  g.set_source(c.k() / 2 - 1);
  g.set_target(t);
  return g;
}

// ---------------------------------------------------------------------------
// Assemblies

namespace {

void require_same_length(std::initializer_list<const ChainInstance*> chains) {
  const std::size_t k = (*chains.begin())->k();
  for (const auto* c : chains) {
    if (c->k() != k) throw std::invalid_argument("chains must have equal length");
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("chain length must be even and >= 4");
    if (!(c->target == Point{0, 0})) throw std::invalid_argument("chains must share t");
  }
}

// Adds the chain's vertices and path edges; returns their ids.
std::vector<VertexId> add_chain(EmbeddedGraph& g, const ChainInstance& c) {
  std::vector<VertexId> ids;
  for (const auto& p : c.points) ids.push_back(g.add_vertex(p));
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) g.add_edge(ids[i], ids[i + 1]);
  return ids;
}

Assembly finish(EmbeddedGraph g, VertexId source, VertexId target, const char* what) {
  g.set_source(source);
  g.set_target(target);
  if (auto ok = validate_convex_subdivision(g); !ok) {
    throw std::runtime_error(std::string(what) + " is not a convex subdivision: " + ok.message);
  }
  return {std::move(g), source, target};
}

}  // namespace

Assembly assemble_two_blue(const ChainInstance& a, const ChainInstance& b) {
  require_same_length({&a, &b});
  if (a.variant != Variant::A || b.variant != Variant::B) {
    throw std::invalid_argument("two-blue assembly takes A(alpha) and B(alpha)");
  }
  if (a.rotation.degrees != b.rotation.degrees) {
    throw std::invalid_argument("two-blue assembly needs both chains at the same angle");
  }
  EmbeddedGraph g;
  const auto as = add_chain(g, a);
  const auto bs = add_chain(g, b);
  const VertexId t = g.add_vertex(a.target);
  g.add_edge(as.front(), bs.front());
  g.add_edge(as.back(), t);
  g.add_edge(bs.back(), t);
  return finish(std::move(g), as[a.k() / 2 - 1], t, "two-blue assembly");
}

Assembly assemble_two_red(const ChainInstance& a, const ChainInstance& b) {
  require_same_length({&a, &b});
  if (a.variant != Variant::A || b.variant != Variant::B) {
    throw std::invalid_argument("two-red assembly takes A(alpha) and B(180 + alpha)");
  }
  if ((b.rotation.degrees - a.rotation.degrees + 360) % 360 != 180) {
    throw std::invalid_argument("two-red assembly needs B rotated 180 degrees past A");
  }
  EmbeddedGraph g;
  const auto as = add_chain(g, a);
  const auto bs = add_chain(g, b);
  const VertexId t = g.add_vertex(a.target);
  g.add_edge(as.back(), bs.back());
  g.add_edge(as.front(), t);
  g.add_edge(bs.front(), t);
  return finish(std::move(g), as[a.k() / 2 - 1], t, "two-red assembly");
}

Assembly assemble_three_blue(const ChainInstance& x, const ChainInstance& y,
                             const ChainInstance& z) {
  require_same_length({&x, &y, &z});
  if (x.rotation.degrees != 0 || y.rotation.degrees != 120 || z.rotation.degrees != 240) {
    throw std::invalid_argument("three-blue assembly takes chains at 0, 120 and 240 degrees");
  }
  EmbeddedGraph g;
  const auto xs = add_chain(g, x);
  const auto ys = add_chain(g, y);
  const auto zs = add_chain(g, z);
  const VertexId t = g.add_vertex(x.target);
  g.add_edge(xs.front(), ys.front());
  g.add_edge(ys.front(), zs.front());
  g.add_edge(zs.front(), xs.front());
  g.add_edge(xs.back(), ys.back());
  g.add_edge(ys.back(), zs.back());
  g.add_edge(zs.back(), xs.back());
  g.add_edge(xs.back(), t);
  g.add_edge(ys.back(), t);
  g.add_edge(zs.back(), t);
  return finish(std::move(g), xs[x.k() / 2 - 1], t, "three-blue assembly");
}

}  // namespace georoute
