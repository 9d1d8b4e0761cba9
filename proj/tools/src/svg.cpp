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

#include "georoute_cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

namespace georoute::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const EmbeddedGraph& g, const std::optional<std::vector<VertexId>>& trace,
                       const SvgOptions& options) {
  const std::size_t n = g.vertex_count();
  std::vector<double> xs(n), ys(n);
  for (VertexId v = 0; v < n; ++v) {
    xs[v] = g.point(v).x.get_d();
    ys[v] = g.point(v).y.get_d();
  }
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (n > 0) {
    min_x = *std::min_element(xs.begin(), xs.end());
    max_x = *std::max_element(xs.begin(), xs.end());
    min_y = *std::min_element(ys.begin(), ys.end());
    max_y = *std::max_element(ys.begin(), ys.end());
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = options.width / span;
  const double w = (max_x - min_x) * scale + 2 * options.margin;
  const double h = (max_y - min_y) * scale + 2 * options.margin;
  // SVG y grows downward.
  auto sx = [&](VertexId v) { return fmt((xs[v] - min_x) * scale + options.margin); };
  auto sy = [&](VertexId v) { return fmt((max_y - ys[v]) * scale + options.margin); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
      << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g stroke=\"#555555\" stroke-width=\"1\">\n";
  for (const auto& [u, v] : g.edges()) {
    out << "<line x1=\"" << sx(u) << "\" y1=\"" << sy(u) << "\" x2=\"" << sx(v) << "\" y2=\""
        << sy(v) << "\"/>\n";
  }
  out << "</g>\n";

  if (trace && !trace->empty()) {
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" stroke-opacity=\"0.6\" "
           "points=\"";
    for (std::size_t i = 0; i < trace->size(); ++i) {
      const VertexId v = (*trace)[i];
      if (v >= n) throw std::out_of_range("trace names vertex " + std::to_string(v));
      out << (i ? " " : "") << sx(v) << ',' << sy(v);
    }
    out << "\"/>\n";
    out << "<text x=\"" << fmt(options.margin) << "\" y=\"" << fmt(options.margin * 0.7)
        << "\" font-family=\"monospace\" font-size=\"12\">steps: " << trace->size() - 1
        << "</text>\n";
  }

  out << "<g stroke=\"black\" stroke-width=\"0.5\">\n";
  for (VertexId v = 0; v < n; ++v) {
    const char* fill = "white";
    if (g.target() && *g.target() == v) {
      fill = "#d62728";
    } else if (g.source() && *g.source() == v) {
      fill = "#2ca02c";
    }
    const double r = fill[0] == 'w' ? options.vertex_radius : options.vertex_radius * 1.6;
    out << "<circle cx=\"" << sx(v) << "\" cy=\"" << sy(v) << "\" r=\"" << fmt(r) << "\" fill=\""
        << fill << "\"/>\n";
  }
  out << "</g>\n";

  if (options.label_vertices) {
    out << "<g font-family=\"monospace\" font-size=\"9\">\n";
    for (VertexId v = 0; v < n; ++v) {
      out << "<text x=\"" << fmt((xs[v] - min_x) * scale + options.margin + 4) << "\" y=\""
          << fmt((max_y - ys[v]) * scale + options.margin - 4) << "\">" << v << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace georoute::cli
