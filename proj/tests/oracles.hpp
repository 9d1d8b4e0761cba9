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

// Reference implementations used only by tests. They share no code with the
// library beyond the Rational typedef and plain data accessors.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "georoute/markov.hpp"
#include "georoute/embedded_graph.hpp"

namespace oracle {

using georoute::Rational;

// Dense row-stochastic matrix, states 0..n-1.
using Matrix = std::vector<std::vector<Rational>>;

inline Matrix dense(const georoute::GenericChain& c) {
  Matrix m(c.size(), std::vector<Rational>(c.size(), 0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& e : c.row(i)) m[i][e.to] += e.probability;
  }
  return m;
}

// Birth-death chain on 1..n as a dense matrix (index i-1).
inline Matrix birth_death(std::size_t n, const std::vector<Rational>& interior_up) {
  Matrix m(n, std::vector<Rational>(n, 0));
  m[0][1] = 1;
  m[n - 1][n - 2] = 1;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    m[i][i + 1] = interior_up[i - 1];
    m[i][i - 1] = 1 - interior_up[i - 1];
  }
  return m;
}

// h(target) = 0, h(v) = 1 + sum_u p(v,u) h(u), by plain Gauss-Jordan with
// partial pivoting on nonzero entries. Assumes every state reaches the
// target almost surely (otherwise the system is singular and this throws).
inline std::vector<Rational> hitting_times(const Matrix& p, std::size_t target) {
  const std::size_t n = p.size();
  Matrix a(n, std::vector<Rational>(n + 1, 0));
  for (std::size_t v = 0; v < n; ++v) {
    if (v == target) {
      a[v][v] = 1;
      continue;
    }
    a[v][v] = 1;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != target) a[v][u] -= p[v][u];
    }
    a[v][n] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("oracle: singular system");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> h(n);
  for (std::size_t v = 0; v < n; ++v) h[v] = a[v][n];
  return h;
}

// Counterclockwise angle in [0, 2pi) of direction d measured from
// direction r, in floating point. Fine for small integer inputs where no
// two candidate angles are close.
inline double ccw_angle(double rx, double ry, double dx, double dy) {
  double a = std::atan2(dy, dx) - std::atan2(ry, rx);
  const double two_pi = 2 * std::acos(-1.0);
  while (a < 0) a += two_pi;
  while (a >= two_pi) a -= two_pi;
  return a;
}

// First neighbor met rotating ccw (or cw) from ray v->t, by brute force over
// floating angles. Neighbors on the ray (angle 0) win in both directions.
inline std::size_t rotate_first(const georoute::EmbeddedGraph& g, std::size_t v,
                                const georoute::Point& t, bool counterclockwise) {
  const double vx = g.point(v).x.get_d(), vy = g.point(v).y.get_d();
  const double rx = t.x.get_d() - vx, ry = t.y.get_d() - vy;
  std::optional<std::pair<double, std::size_t>> best;
  for (std::size_t u : g.neighbors(v)) {
    double a = ccw_angle(rx, ry, g.point(u).x.get_d() - vx, g.point(u).y.get_d() - vy);
    if (a > 1e-12 && !counterclockwise) a = 2 * std::acos(-1.0) - a;
    if (a <= 1e-12) a = 0;
    if (!best || a < best->first - 1e-12 || (std::abs(a - best->first) <= 1e-12 && u < best->second)) {
      best = std::make_pair(a, u);
    }
  }
  return best->second;
}

// In-circle sign for integer points via 128-bit arithmetic; > 0 when d is
// inside the circle through counterclockwise a, b, c.
inline int in_circle_i128(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
                          std::int64_t cx, std::int64_t cy, std::int64_t dx, std::int64_t dy) {
  using I = __int128;
  const I adx = ax - dx, ady = ay - dy;
  const I bdx = bx - dx, bdy = by - dy;
  const I cdx = cx - dx, cdy = cy - dy;
  const I det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) -
                (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady) +
                (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace oracle
