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

#include "georoute/point.hpp"

namespace georoute {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
}

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Left:
      return "Left";
    case Orientation::Right:
      return "Right";
    case Orientation::Collinear:
      return "Collinear";
  }
  return "?";
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const int s = sign(cross(q - p, r - p));
  return s > 0 ? Orientation::Left : (s < 0 ? Orientation::Right : Orientation::Collinear);
}

int in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point ad = a - d;
  const Point bd = b - d;
  const Point cd = c - d;
  const Rational al = squared_norm(ad);
  const Rational bl = squared_norm(bd);
  const Rational cl = squared_norm(cd);
  const Rational det = ad.x * (bd.y * cl - bl * cd.y) - ad.y * (bd.x * cl - bl * cd.x) +
                       al * (bd.x * cd.y - bd.y * cd.x);
  return sign(det);
}

bool on_segment(const Point& a, const Point& b, const Point& q) {
  if (orientation(a, b, q) != Orientation::Collinear) return false;
  return sign(dot(q - a, q - b)) <= 0;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const auto o1 = orientation(a, b, c);
  const auto o2 = orientation(a, b, d);
  const auto o3 = orientation(c, d, a);
  const auto o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
      o3 != Orientation::Collinear && o4 != Orientation::Collinear) {
    return true;
  }
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

bool AngularLess::in_first_half(const Point& a) const {
  const int c = sign(cross(reference_, a));
  return c > 0 || (c == 0 && sign(dot(reference_, a)) > 0);
}

bool AngularLess::operator()(const Point& a, const Point& b) const {
  const bool ha = in_first_half(a);
  const bool hb = in_first_half(b);
  if (ha != hb) return ha;
  return sign(cross(a, b)) > 0;
}

}  // namespace georoute
