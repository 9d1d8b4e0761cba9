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
#include <string>
#include <vector>

#include "georoute/embedded_graph.hpp"
#include "georoute/faces.hpp"

namespace georoute {

// ---------------------------------------------------------------------------
// Exponential trap for Random-Compass

/// Pinwheel triangulation around a central target t. Each of `paths` arms
/// holds k + 1 vertices: the innermost is adjacent to t, the outermost is a
/// hull vertex. At every other arm vertex Random-Compass chooses between the
/// next vertex inward and the outer endpoint of the following arm, so the
/// expected time from an outer endpoint is 2^{k+1} - 1.
struct TrapInstance {
  EmbeddedGraph graph;  // source() and target() are set
  VertexId source;
  VertexId target;
  std::size_t k;
  std::size_t paths;
  /// arms[j][h - 1] is the vertex h hops from t on arm j.
  std::vector<std::vector<VertexId>> arms;
};

/// k >= 1, paths in {3, 4}. Throws std::invalid_argument on bad arguments and
/// std::logic_error if the generated instance fails its own checks.
TrapInstance build_bad_unbiased(std::size_t k, std::size_t paths);

/// Verifies the Random-Compass choice structure of a trap: neighbors of t
/// must route straight to t; every other vertex must offer exactly one step
/// inward along its arm and one jump to an outer-face vertex, and all outer
/// vertices must sit at the same arm depth.
ValidationReport check_trap_structure(const EmbeddedGraph& g, VertexId t);

// ---------------------------------------------------------------------------
// Isolated chains A(alpha), B(alpha)

/// Exact rotation about the origin. Angles that are multiples of 90 deg are
/// exact; the others are Pythagorean approximations within 0.1 deg.
struct RationalRotation {
  int degrees = 0;  // nominal angle
  Rational cos = 1;
  Rational sin = 0;

  Point apply(const Point& p) const;
};

/// Supported nominal angles: multiples of 60 or 90 (mod 360). Rotations by
/// a + 180 are exactly the negation of rotation by a.
RationalRotation rational_rotation(int degrees);

enum class Variant { A, B };
const char* to_string(Variant v);

/// a_1..a_k collinear, a_k the unique closest vertex to t = origin, and the
/// angle a_1 a_k t strictly between 150 and 180 degrees. B is the mirror of
/// A through the line parallel to A that contains t.
struct ChainInstance {
  Variant variant;
  RationalRotation rotation;
  std::vector<Point> points;  // a_1 .. a_k
  Point target{0, 0};

  std::size_t k() const { return points.size(); }
  std::string label() const;  // e.g. "A(120)"
};

/// k even and >= 4. Throws std::logic_error if the emitted coordinates fail
/// check_chain_invariants.
ChainInstance build_chain(Variant variant, int alpha_degrees, std::size_t k);

ValidationReport check_chain_invariants(const ChainInstance& c);

/// Exact test for "angle a b c lies strictly between 150 and 180 degrees".
bool angle_in_150_180(const Point& a, const Point& b, const Point& c);

/// The chain as a path plus the isolated vertex t. Ids: a_i -> i - 1,
/// t -> k. Source a_{k/2}, target t.
EmbeddedGraph chain_graph(const ChainInstance& c);

// ---------------------------------------------------------------------------
// Hard convex subdivisions assembled from chains

struct Assembly {
  EmbeddedGraph graph;  // source() and target() are set
  VertexId source;
  VertexId target;
};

/// Chains A(alpha), B(alpha) joined by a_1 b_1, a_k t, b_k t; 2k + 1
/// vertices, source a_{k/2}. Throws std::invalid_argument for mismatched
/// inputs and std::runtime_error if the result is not a convex subdivision.
Assembly assemble_two_blue(const ChainInstance& a, const ChainInstance& b);

/// Chains A(alpha), B(180 + alpha) joined by a_k b_k, a_1 t, b_1 t.
Assembly assemble_two_red(const ChainInstance& a, const ChainInstance& b);

/// Chains X, Y, Z at 0, 120, 240 degrees joined by the outer triangle
/// x_1 y_1 z_1, the inner triangle x_k y_k z_k and the spokes x_k t, y_k t,
/// z_k t; 3k + 1 vertices, source x_{k/2}.
Assembly assemble_three_blue(const ChainInstance& x, const ChainInstance& y,
                             const ChainInstance& z);

}  // namespace georoute
