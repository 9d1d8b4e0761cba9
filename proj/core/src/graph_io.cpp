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

#include "georoute/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace georoute {

void write_graph(std::ostream& os, const EmbeddedGraph& g) {
  os << "geomgraph 1\n";
  os << "V " << g.vertex_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << v << ' ' << to_string(g.point(v).x) << ' ' << to_string(g.point(v).y) << '\n';
  }
  const auto edges = g.edges();
  os << "E " << edges.size() << '\n';
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
  if (g.source()) os << "S " << *g.source() << '\n';
  if (g.target()) os << "T " << *g.target() << '\n';
}

std::string write_graph(const EmbeddedGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next non-comment, non-blank line split into tokens; empty at EOF.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return tokens;
    }
    return {};
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::runtime_error("geomgraph line " + std::to_string(line_no_) + ": " + why);
  }

  std::size_t parse_count(const std::string& tok) const {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      fail("expected a non-negative integer, got '" + tok + "'");
    }
    if (pos != tok.size() || tok.front() == '-') {
      fail("expected a non-negative integer, got '" + tok + "'");
    }
    return static_cast<std::size_t>(value);
  }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

}  // namespace

EmbeddedGraph read_graph(std::istream& is) {
  LineReader in(is);
  auto header = in.next();
  if (header.size() != 2 || header[0] != "geomgraph" || header[1] != "1") {
    in.fail("expected header 'geomgraph 1'");
  }

  auto vline = in.next();
  if (vline.size() != 2 || vline[0] != "V") in.fail("expected 'V <count>'");
  const std::size_t n = in.parse_count(vline[1]);
  std::vector<std::optional<Point>> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto tok = in.next();
    if (tok.size() != 3) in.fail("expected '<id> <x> <y>'");
    const std::size_t id = in.parse_count(tok[0]);
    if (id >= n) in.fail("vertex id " + tok[0] + " out of range");
    if (points[id]) in.fail("duplicate vertex id " + tok[0]);
    try {
      points[id] = Point{parse_rational(tok[1]), parse_rational(tok[2])};
    } catch (const std::invalid_argument& e) {
      in.fail(e.what());
    }
  }

  EmbeddedGraph g;
  try {
    for (auto& p : points) g.add_vertex(std::move(*p));
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }

  auto eline = in.next();
  if (eline.size() != 2 || eline[0] != "E") in.fail("expected 'E <count>'");
  const std::size_t m = in.parse_count(eline[1]);
  for (std::size_t i = 0; i < m; ++i) {
    auto tok = in.next();
    if (tok.size() != 2) in.fail("expected '<u> <v>'");
    try {
      g.add_edge(in.parse_count(tok[0]), in.parse_count(tok[1]));
    } catch (const std::logic_error& e) {
      in.fail(e.what());
    }
  }

  for (auto tok = in.next(); !tok.empty(); tok = in.next()) {
    if (tok.size() != 2 || (tok[0] != "S" && tok[0] != "T")) {
      in.fail("unexpected content after the edge list");
    }
    const std::size_t id = in.parse_count(tok[1]);
    if (id >= g.vertex_count()) in.fail("designated vertex out of range");
    if (tok[0] == "S") {
      g.set_source(id);
    } else {
      g.set_target(id);
    }
  }
  return g;
}

EmbeddedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_graph(in);
}

void write_graph_file(const std::string& path, const EmbeddedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_graph(out, g);
}

}  // namespace georoute
