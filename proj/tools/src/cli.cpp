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

#include "georoute_cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "georoute/adversary.hpp"
#include "georoute/analysis.hpp"
#include "georoute/classify.hpp"
#include "georoute/constructions.hpp"
#include "georoute/delaunay.hpp"
#include "georoute/faces.hpp"
#include "georoute/graph_io.hpp"
#include "georoute/strategy.hpp"
#include "georoute_cli/svg.hpp"

namespace georoute::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  std::string graph_path;
  std::string output;
  std::string strategy = "random-compass";
  std::string from = "s";
  std::string to = "t";
  std::string variant;
  std::string trace_path;
  std::size_t k = 0;
  std::size_t paths = 4;
  std::size_t n = 20;
  std::size_t trials = 1;
  std::size_t cap = 1000000;
  int alpha = 0;
  std::uint64_t seed = 1;
  bool decimal = false;
  bool triangulation = false;
  bool trap = false;
  bool labels = false;
};

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string show(const ExpectedTime& e, bool decimal) {
  if (!decimal || e.is_infinite()) return e.str();
  return fixed(e.approx());
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

std::size_t parse_id(const std::string& text, const char* flag) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError(std::string(flag) + " expects a vertex id, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

VertexId resolve_to(const EmbeddedGraph& g, const std::string& spec) {
  VertexId t;
  if (spec == "t") {
    if (!g.target()) throw UsageError("graph has no target; pass --to <id>");
    t = *g.target();
  } else {
    t = parse_id(spec, "--to");
  }
  if (t >= g.vertex_count()) throw UsageError("--to names a vertex outside the graph");
  return t;
}

// "mid" is the middle of the non-target ids: a_{k/2} on a chain graph.
VertexId resolve_from(const EmbeddedGraph& g, const std::string& spec, VertexId t) {
  VertexId s;
  if (spec == "s") {
    if (!g.source()) throw UsageError("graph has no source line; pass --from <id>");
    s = *g.source();
  } else if (spec == "t") {
    s = t;
  } else if (spec == "mid") {
    std::vector<VertexId> others;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v != t) others.push_back(v);
    }
    if (others.empty()) throw UsageError("graph has no vertex besides the target");
    s = others[(others.size() + 1) / 2 - 1];
  } else {
    s = parse_id(spec, "--from");
  }
  if (s >= g.vertex_count()) throw UsageError("--from names a vertex outside the graph");
  return s;
}

Variant parse_variant(const std::string& v) {
  if (v == "A") return Variant::A;
  if (v == "B") return Variant::B;
  throw UsageError("variant must be A or B, got '" + v + "'");
}

void require_k(const Options& o) {
  if (o.k == 0) throw UsageError("--k is required");
}

int cmd_gen(const Options& o, std::ostream& out) {
  EmbeddedGraph g;
  if (o.kind == "trap") {
    require_k(o);
    g = build_bad_unbiased(o.k, o.paths).graph;
  } else if (o.kind == "chain") {
    require_k(o);
    g = chain_graph(build_chain(parse_variant(o.variant.empty() ? "A" : o.variant), o.alpha, o.k));
  } else if (o.kind == "delaunay") {
    g = random_delaunay(o.n, o.seed);
  } else if (o.kind == "two-blue") {
    require_k(o);
    g = assemble_two_blue(build_chain(Variant::A, o.alpha, o.k),
                          build_chain(Variant::B, o.alpha, o.k))
            .graph;
  } else if (o.kind == "two-red") {
    require_k(o);
    g = assemble_two_red(build_chain(Variant::A, o.alpha, o.k),
                         build_chain(Variant::B, o.alpha + 180, o.k))
            .graph;
  } else {  // three-blue
    require_k(o);
    const std::string v = o.variant.empty() ? "AAA" : o.variant;
    if (v.size() != 3) throw UsageError("three-blue takes --variant with three letters, e.g. ABA");
    g = assemble_three_blue(build_chain(parse_variant(v.substr(0, 1)), 0, o.k),
                            build_chain(parse_variant(v.substr(1, 1)), 120, o.k),
                            build_chain(parse_variant(v.substr(2, 1)), 240, o.k))
            .graph;
  }
  emit(o.output, write_graph(g), out);
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const EmbeddedGraph g = read_graph_file(o.graph_path);
  ValidationReport report =
      o.triangulation ? validate_triangulation(g) : validate_convex_subdivision(g);
  const char* what = o.triangulation ? "triangulation" : "convex subdivision";
  if (report && o.trap) {
    if (!g.target()) throw UsageError("--trap needs a graph with a target");
    report = check_trap_structure(g, *g.target());
    what = "trap";
  }
  if (!report) {
    out << "fail: " << report.message << '\n';
    return 1;
  }
  out << "ok: " << what << " (" << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges)\n";
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const EmbeddedGraph g = read_graph_file(o.graph_path);
  const VertexId t = resolve_to(g, o.to);
  const VertexId s = resolve_from(g, o.from, t);
  const auto strategy = make_strategy(o.strategy);
  const HittingTimeReport r = expected_routing_time(g, *strategy, s, t);
  out << show(r.expectation, o.decimal) << '\n';
  return 0;
}

int cmd_route(const Options& o, std::ostream& out) {
  const EmbeddedGraph g = read_graph_file(o.graph_path);
  const VertexId t = resolve_to(g, o.to);
  const VertexId s = resolve_from(g, o.from, t);
  const auto strategy = make_strategy(o.strategy);
  if (o.cap == 0) throw UsageError("--cap must be at least 1");
  if (o.trials <= 1) {
    RngStream rng(o.seed);
    const WalkTrace w = route_once(g, *strategy, s, t, t, o.cap, rng);
    std::ostringstream path;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) path << (i ? " " : "") << w.vertices[i];
    out << "steps " << w.steps << '\n';
    out << "reached " << (w.reached ? "yes" : "no") << '\n';
    out << "path " << path.str() << '\n';
    if (!o.output.empty()) {
      emit(o.output,
           "# " + o.strategy + " seed " + std::to_string(o.seed) + " steps " +
               std::to_string(w.steps) + "\n" + path.str() + "\n",
           out);
    }
    return 0;
  }
  const MonteCarloResult mc = monte_carlo_walk(g, *strategy, s, t, o.trials, o.cap, o.seed);
  out << "trials " << mc.summary.trials << '\n';
  out << "cap " << mc.summary.cap << '\n';
  out << "seed " << mc.summary.master_seed << '\n';
  out << "mean " << fixed(mc.summary.mean) << '\n';
  out << "stderr " << fixed(mc.summary.standard_error) << '\n';
  out << "censored " << fixed(mc.summary.censored_fraction) << '\n';
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  require_k(o);
  if (o.k % 2 != 0 || o.k < 4) throw UsageError("--k must be even and at least 4");
  const ChainInstance chain =
      build_chain(parse_variant(o.variant.empty() ? "A" : o.variant), o.alpha, o.k);
  const auto strategy = make_strategy(o.strategy);
  ClassifyOptions options;
  options.seed = o.seed;
  if (o.trials > 1) options.trials = o.trials;
  const ChainColor c = classify_chain(*strategy, chain, options);
  out << "chain=" << chain.label() << '\n';
  out << "color=" << to_string(c.color) << '\n';
  out << "expectation=" << show(c.expectation, o.decimal) << '\n';
  out << "threshold=" << to_string(c.threshold) << '\n';
  out << "method=" << to_string(c.method) << '\n';
  if (c.outward) out << "outward=" << show(*c.outward, o.decimal) << '\n';
  return 0;
}

int cmd_adversary(const Options& o, std::ostream& out) {
  require_k(o);
  if (o.k % 2 != 0 || o.k < 4) throw UsageError("--k must be even and at least 4");
  const auto strategy = make_strategy(o.strategy);
  AdversaryOptions options;
  options.seed = o.seed;
  options.classify.seed = o.seed;
  if (o.trials > 1) options.trials = options.classify.trials = o.trials;
  const AdversaryCertificate cert = adversary(*strategy, o.k, options);
  const std::string text = serialize_certificate(cert);
  if (!o.output.empty()) {
    const std::filesystem::path dir(o.output);
    std::filesystem::create_directories(dir);
    emit((dir / "graph.txt").string(), write_graph(cert.graph), out);
    emit((dir / "certificate.txt").string(), text, out);
  }
  out << text;
  return cert.holds() ? 0 : 1;
}

std::vector<VertexId> read_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<VertexId> ids;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      if (tok.front() == '#') break;
      try {
        ids.push_back(parse_id(tok, "trace"));
      } catch (const UsageError&) {
        throw std::runtime_error(path + ":" + std::to_string(number) + ": bad vertex id '" + tok +
                                 "'");
      }
    }
  }
  return ids;
}

int cmd_render(const Options& o, std::ostream& out) {
  const EmbeddedGraph g = read_graph_file(o.graph_path);
  std::optional<std::vector<VertexId>> trace;
  if (!o.trace_path.empty()) trace = read_trace(o.trace_path);
  SvgOptions options;
  options.label_vertices = o.labels;
  emit(o.output, render_svg(g, trace, options), out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Memoryless geometric routing laboratory", "georoute"};
  app.require_subcommand(1);
  Options o;
  const auto& names = builtin_strategy_names();

  auto* gen = app.add_subcommand("gen", "Generate a graph in the geomgraph text format");
  gen->add_option("kind", o.kind, "trap | chain | delaunay | two-blue | two-red | three-blue")
      ->required()
      ->check(CLI::IsMember({"trap", "chain", "delaunay", "two-blue", "two-red", "three-blue"}));
  gen->add_option("--k", o.k, "Trap depth or chain length");
  gen->add_option("--paths", o.paths, "Trap arms")->check(CLI::IsMember({3, 4}));
  gen->add_option("--variant", o.variant, "Chain variant A or B (three letters for three-blue)");
  gen->add_option("--alpha", o.alpha, "Chain rotation in degrees (multiple of 60 or 90)");
  gen->add_option("--n", o.n, "Number of random points for delaunay")
      ->check(CLI::Range(3, 60));
  gen->add_option("--seed", o.seed, "Seed for delaunay");
  gen->add_option("-o", o.output, "Output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Check a graph is a convex subdivision");
  validate->add_option("graph", o.graph_path)->required();
  validate->add_flag("--triangulation", o.triangulation, "Require triangular bounded faces");
  validate->add_flag("--trap", o.trap, "Also check the Random-Compass trap structure");

  auto add_endpoints = [&](CLI::App* c) {
    c->add_option("graph", o.graph_path)->required();
    c->add_option("--strategy", o.strategy)->check(CLI::IsMember(names));
    c->add_option("--from", o.from, "Source: vertex id, s (graph source), t or mid");
    c->add_option("--to", o.to, "Target: vertex id or t (graph target)");
  };

  auto* route = app.add_subcommand("route", "Simulate walks");
  add_endpoints(route);
  route->add_option("--seed", o.seed);
  route->add_option("--trials", o.trials, "More than one prints a Monte Carlo summary");
  route->add_option("--cap", o.cap, "Step cap per walk");
  route->add_option("-o", o.output, "Write the walk as a trace file");

  auto* solve = app.add_subcommand("solve", "Exact expected routing time");
  add_endpoints(solve);
  solve->add_flag("--decimal", o.decimal, "Print a decimal approximation");

  auto* classify = app.add_subcommand("classify", "Color a chain Red or Blue for a strategy");
  classify->add_option("--strategy", o.strategy)->check(CLI::IsMember(names));
  classify->add_option("--variant", o.variant, "A or B");
  classify->add_option("--alpha", o.alpha);
  classify->add_option("--k", o.k)->required();
  classify->add_option("--seed", o.seed);
  classify->add_option("--trials", o.trials);
  classify->add_flag("--decimal", o.decimal);

  auto* adv = app.add_subcommand("adversary", "Build a hard convex subdivision for a strategy");
  adv->add_option("--strategy", o.strategy)->check(CLI::IsMember(names));
  adv->add_option("--k", o.k)->required();
  adv->add_option("--seed", o.seed);
  adv->add_option("--trials", o.trials);
  adv->add_option("-o", o.output, "Directory for graph.txt and certificate.txt");

  auto* render = app.add_subcommand("render", "Draw a graph (and a trace) as SVG");
  render->add_option("graph", o.graph_path)->required();
  render->add_option("--trace", o.trace_path, "Trace file written by route -o");
  render->add_flag("--labels", o.labels, "Print vertex ids");
  render->add_option("-o", o.output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (validate->parsed()) return cmd_validate(o, out);
    if (route->parsed()) return cmd_route(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (adv->parsed()) return cmd_adversary(o, out);
    if (render->parsed()) return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace georoute::cli
