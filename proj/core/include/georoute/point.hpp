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

#include <ostream>

#include "georoute/rational.hpp"

namespace georoute {

/// A point of the plane with exact rational coordinates.
struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  /// Lexicographic (x, then y); only used for ordered containers.
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
};

std::ostream& operator<<(std::ostream& os, const Point& p);

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

const char* to_string(Orientation o);

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational squared_norm(const Point& a) { return dot(a, a); }
inline Rational squared_distance(const Point& a, const Point& b) { return squared_norm(a - b); }

/// Sign of (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Sign of the in-circle determinant: > 0 when d lies strictly inside the
/// circle through a, b, c given counterclockwise, < 0 outside, 0 on it.
int in_circle(const Point& a, const Point& b, const Point& c, const Point& d);

/// True if q lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& q);

/// True if the closed segments [a, b] and [c, d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Strict weak ordering of nonzero direction vectors by counterclockwise
/// angle measured from `reference`, in [0, 2pi). Quadrant-free: uses a
/// half-plane split then a cross product, so it is exact.
class AngularLess {
 public:
  explicit AngularLess(Point reference) : reference_(std::move(reference)) {}
  bool operator()(const Point& a, const Point& b) const;
  /// Whether `a` falls in [0, pi) relative to the reference.
  bool in_first_half(const Point& a) const;

 private:
  Point reference_;
};

}  // namespace georoute
