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

// Acceptance suite: one PASS/FAIL line per criterion. Exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "georoute/adversary.hpp"
#include "georoute/analysis.hpp"
#include "georoute/classify.hpp"
#include "georoute/constructions.hpp"
#include "georoute/delaunay.hpp"
#include "georoute/graph_io.hpp"
#include "georoute/markov.hpp"
#include "georoute_cli/cli.hpp"
#include "oracles.hpp"

namespace {

using namespace georoute;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Rational integer(unsigned long v) { return Rational(v); }

std::vector<Rational> random_interior(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(2, 60);
  std::vector<Rational> up;
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    const long b = den(rng);
    std::uniform_int_distribution<long> num(1, b - 1);
    up.push_back(make_rational(num(rng), b));
  }
  return up;
}

Outcome trap_values(std::size_t paths, double time_limit) {
  Outcome o;
  const auto start = Clock::now();
  RandomCompassStrategy rc;
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto trap = build_bad_unbiased(k, paths);
    const auto r = expected_routing_time(trap.graph, rc, trap.source, trap.target);
    const Rational expected = power_of_two(static_cast<unsigned>(k + 1)) - 1;
    o.require(r.expectation == ExpectedTime::finite(expected),
              "k=" + std::to_string(k) + ": got " + r.expectation.str() + ", want " +
                  to_string(expected));
  }
  const double s = seconds_since(start);
  o.require(s < time_limit, "took " + fmt_seconds(s));
  if (o.pass) o.detail = "k=1..12 exact, " + fmt_seconds(s);
  return o;
}

// 1
Outcome criterion_trap4() { return trap_values(4, 5.0); }

// 2
Outcome criterion_trap3() { return trap_values(3, 5.0); }

// 3
Outcome criterion_all_sources() {
  Outcome o;
  const std::size_t k = 8;
  const auto trap = build_bad_unbiased(k, 4);
  const auto ic = induced_chain(trap.graph, RandomCompassStrategy{}, trap.target);
  const auto h = solve_hitting_times(ic.chain, trap.target);
  const Rational bound = (power_of_two(9) - 1) / 2;
  std::size_t below = 0;
  std::optional<ExpectedTime> worst;
  VertexId worst_v = 0;
  for (VertexId v = 0; v < trap.graph.vertex_count(); ++v) {
    if (v == trap.target) continue;
    if (!h[v].at_least(bound)) ++below;
    if (!worst || (!h[v].is_infinite() && (worst->is_infinite() || h[v].value() < worst->value()))) {
      worst = h[v];
      worst_v = v;
    }
  }
  o.require(below == 0, std::to_string(below) + " of " +
                            std::to_string(trap.graph.vertex_count() - 1) +
                            " sources below 511/2; min " + worst->str() + " at vertex " +
                            std::to_string(worst_v) + " (adjacent to t: " +
                            (trap.graph.has_edge(worst_v, trap.target) ? "yes" : "no") + ")");
  if (o.pass) o.detail = "every source >= 511/2";
  return o;
}

// 4
Outcome criterion_square_law() {
  Outcome o;
  const auto start = Clock::now();
  for (std::size_t n = 2; n <= 50; ++n) {
    const Rational got = hitting_time(BirthDeathChain::standard(n), 1, n);
    o.require(got == integer((n - 1) * (n - 1)),
              "n=" + std::to_string(n) + ": got " + to_string(got));
  }
  const double s = seconds_since(start);
  o.require(s < 1.0, "took " + fmt_seconds(s));
  if (o.pass) o.detail = "n=2..50, " + fmt_seconds(s);
  return o;
}

// 5
Outcome criterion_roundtrip() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(20260501);
  std::size_t tight = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng() % 14;  // n <= 15
    const BirthDeathChain c(n, random_interior(n, rng));
    const Rational r = roundtrip_expectation(c);
    const Rational bound = integer(2 * (n - 1) * (n - 1));
    o.require(r >= bound, "chain " + std::to_string(i) + " (n=" + std::to_string(n) +
                              ") roundtrip " + to_string(r) + " < " + to_string(bound));
    if (r == bound) ++tight;
  }
  for (std::size_t n = 2; n <= 20; ++n) {
    const Rational r = roundtrip_expectation(BirthDeathChain::standard(n));
    o.require(r == integer(2 * (n - 1) * (n - 1)),
              "standard n=" + std::to_string(n) + " gives " + to_string(r));
  }
  const double s = seconds_since(start);
  o.require(s < 30.0, "took " + fmt_seconds(s));
  if (o.pass) {
    o.detail = "1000 fuzzed (" + std::to_string(tight) + " tight), standard n=2..20 equal, " +
               fmt_seconds(s);
  }
  return o;
}

// 6
Outcome criterion_oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(6006);
  std::size_t comparisons = 0;
  for (int i = 0; i < 500 && o.pass; ++i) {
    const std::size_t n = 2 + rng() % 12;
    const BirthDeathChain c(n, random_interior(n, rng));
    const GenericChain g = to_generic(c);
    std::vector<std::vector<ExpectedTime>> solved;
    for (std::size_t j = 0; j < n; ++j) solved.push_back(solve_hitting_times(g, j));
    for (std::size_t a = 1; a <= n; ++a) {
      for (std::size_t b = 1; b <= n; ++b) {
        if (a == b) continue;
        ++comparisons;
        o.require(ExpectedTime::finite(hitting_time(c, a, b)) == solved[b - 1][a - 1],
                  "chain " + std::to_string(i) + " T_{" + std::to_string(a) + "," +
                      std::to_string(b) + "}");
      }
    }
    // Excursions: the sub-chain beyond s, solved as an ordinary chain.
    for (std::size_t s = 1; s < n; ++s) {
      // Up excursion lives on {s..n}: one step up then the hitting time of s.
      std::vector<Rational> up;
      for (std::size_t j = s + 1; j < n; ++j) up.push_back(c.up(j));
      const std::size_t m = n - s + 1;
      Rational via_solver = 2;
      if (m > 2) {
        const auto h = solve_hitting_times(to_generic(BirthDeathChain(m, up)), 0);
        via_solver = 1 + h[1].value();
      }
      ++comparisons;
      o.require(up_excursion_expectation(c, s) == via_solver,
                "chain " + std::to_string(i) + " up excursion at " + std::to_string(s));
    }
    for (std::size_t s = 2; s <= n; ++s) {
      std::vector<Rational> up;
      for (std::size_t j = 2; j < s; ++j) up.push_back(c.up(j));
      Rational via_solver = 2;
      if (s > 2) {
        const auto h = solve_hitting_times(to_generic(BirthDeathChain(s, up)), s - 1);
        via_solver = 1 + h[s - 2].value();
      }
      ++comparisons;
      o.require(down_excursion_expectation(c, s) == via_solver,
                "chain " + std::to_string(i) + " down excursion at " + std::to_string(s));
    }
  }
  if (o.pass) o.detail = "500 chains, " + std::to_string(comparisons) + " exact comparisons";
  return o;
}

// 7
Outcome criterion_interval() {
  Outcome o;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto r = reflecting_interval_max_hit(BirthDeathChain::standard(2 * n + 1));
    const auto want = ExpectedTime::finite(integer(3 * n * n));
    o.require(r.to_upper == want && r.to_lower == want,
              "n=" + std::to_string(n) + ": " + r.to_upper.str() + ", " + r.to_lower.str());
  }
  std::mt19937_64 rng(7007);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const auto r = reflecting_interval_max_hit(
        BirthDeathChain(2 * n + 1, random_interior(2 * n + 1, rng)));
    o.require(r.max.at_least(Rational(static_cast<unsigned long>(2 * n * n), 3)),
              "fuzzed chain " + std::to_string(i) + " max " + r.max.str());
  }
  if (o.pass) o.detail = "standard n=1..10 equal 3n^2; 200 fuzzed max >= (2/3)n^2";
  return o;
}

// 8
Outcome criterion_classifier() {
  Outcome o;
  const std::size_t k = 12;
  const auto chain = build_chain(Variant::A, 0, k);
  const auto rc = classify_chain(RandomCompassStrategy{}, chain);
  const auto gr = classify_chain(GreedyStrategy{}, chain);
  o.require(rc.color == Color::Blue, "random-compass colored " + std::string(to_string(rc.color)));
  o.require(rc.expectation == ExpectedTime::finite(108),
            "random-compass expectation " + rc.expectation.str() + ", want 108");
  o.require(gr.color == Color::Red, "greedy colored " + std::string(to_string(gr.color)));
  o.require(gr.expectation == ExpectedTime::finite(6),
            "greedy expectation " + gr.expectation.str() + ", want 6");
  if (o.pass) o.detail = "random-compass Blue 108, greedy Red 6";
  return o;
}

// 9
Outcome criterion_adversary() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream summary;
  for (const auto& name : builtin_strategy_names()) {
    const auto s = make_strategy(name);
    std::optional<ExpectedTime> e8, e16;
    for (std::size_t k : {8, 12, 16}) {
      const auto cert = adversary(*s, k);
      const std::size_t n = cert.graph.vertex_count();
      const std::string where = name + " k=" + std::to_string(k);
      o.require(validate_convex_subdivision(cert.graph).ok, where + ": not a convex subdivision");
      o.require(n == 2 * k + 1 || n == 3 * k + 1, where + ": " + std::to_string(n) + " vertices");
      // Re-solve independently of the certificate's own number.
      const auto ic = induced_chain(cert.graph, *s, cert.target);
      const auto h = solve_hitting_times(ic.chain, cert.target)[cert.source];
      o.require(h == cert.routing.expectation, where + ": certificate disagrees with re-solve");
      o.require(h.at_least(blue_threshold(k)),
                where + ": " + h.str() + " < " + to_string(blue_threshold(k)));
      if (k == 8) e8 = h;
      if (k == 16) e16 = h;
    }
    summary << ' ' << name << '=' << e8->str() << "->" << e16->str();
    if (name == "random-compass" || name == "random-walk") {
      const bool finite = !e8->is_infinite() && !e16->is_infinite();
      o.require(finite, name + ": infinite expectation");
      if (finite) {
        const Rational ratio = e16->value() / e8->value();
        o.require(ratio >= Rational(7, 2), name + ": E16/E8 = " + to_string(ratio) + " < 3.5");
        char buf[32];
        std::snprintf(buf, sizeof buf, "(x%.2f)", ratio.get_d());
        summary << buf;
      }
    }
  }
  const double s = seconds_since(start);
  o.require(s < 60.0, "took " + fmt_seconds(s));
  if (o.pass) o.detail = "E(8)->E(16):" + summary.str() + ", " + fmt_seconds(s);
  return o;
}

// 10
Outcome criterion_deterministic_on_delaunay() {
  Outcome o;
  const std::vector<std::string> names{"greedy", "compass", "greedy-compass"};
  std::size_t routes = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_delaunay(20, 1000 + seed);
    const std::size_t n = g.vertex_count();
    for (const auto& name : names) {
      const auto s = make_strategy(name);
      for (VertexId t = 0; t < n; ++t) {
        const auto ic = induced_chain(g, *s, t);
        for (VertexId src = 0; src < n; ++src) {
          std::set<VertexId> seen{src};
          VertexId at = src;
          std::size_t steps = 0;
          bool revisit = false;
          while (at != t && steps < n) {
            at = ic.chain.row(at).front().to;
            ++steps;
            if (!seen.insert(at).second) revisit = true;
          }
          ++routes;
          o.require(at == t && !revisit,
                    name + " on set " + std::to_string(seed) + " from " + std::to_string(src) +
                        " to " + std::to_string(t) + (revisit ? ": revisits" : ": stuck"));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(routes) + " routes on 100 triangulations";
  return o;
}

// 11
Outcome criterion_plumbing() {
  Outcome o;
  std::vector<EmbeddedGraph> graphs;
  for (std::size_t paths : {3, 4}) {
    for (std::size_t k = 1; k <= 12; ++k) graphs.push_back(build_bad_unbiased(k, paths).graph);
  }
  for (int alpha : {0, 60, 120, 180, 240, 300}) {
    for (Variant v : {Variant::A, Variant::B}) {
      for (std::size_t k : {4, 8, 16}) graphs.push_back(chain_graph(build_chain(v, alpha, k)));
    }
    graphs.push_back(assemble_two_blue(build_chain(Variant::A, alpha, 8),
                                       build_chain(Variant::B, alpha, 8)).graph);
    graphs.push_back(assemble_two_red(build_chain(Variant::A, alpha, 8),
                                      build_chain(Variant::B, alpha + 180, 8)).graph);
  }
  for (int mask = 0; mask < 8; ++mask) {
    auto v = [&](int bit) { return (mask >> bit) & 1 ? Variant::B : Variant::A; };
    graphs.push_back(assemble_three_blue(build_chain(v(0), 0, 8), build_chain(v(1), 120, 8),
                                         build_chain(v(2), 240, 8)).graph);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) graphs.push_back(random_delaunay(20, seed));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string text = write_graph(graphs[i]);
    std::istringstream in(text);
    const EmbeddedGraph back = read_graph(in);
    o.require(back == graphs[i] && write_graph(back) == text,
              "graph " + std::to_string(i) + " does not round-trip");
  }

  const std::vector<std::vector<std::string>> argvs{
      {"gen", "trap", "--k", "7", "--paths", "3"},
      {"gen", "delaunay", "--n", "20", "--seed", "42"},
      {"gen", "three-blue", "--k", "8", "--variant", "BAB"},
      {"classify", "--strategy", "random-compass", "--k", "12", "--alpha", "240"},
      {"adversary", "--strategy", "random-walk", "--k", "8", "--seed", "5"},
  };
  for (const auto& argv : argvs) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(argv, a, ea);
    const int cb = cli::run(argv, b, eb);
    o.require(ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty(),
              "argv '" + argv[0] + " " + argv[1] + "' not reproducible");
  }
  // Seeded walks through the CLI, using a graph emitted by the CLI.
  std::ostringstream graph_text, ignore;
  cli::run({"gen", "trap", "--k", "6"}, graph_text, ignore);
  const std::string path = "acceptance_trap.txt";
  std::istringstream graph_in(graph_text.str());
  write_graph_file(path, read_graph(graph_in));
  for (const auto& extra : std::vector<std::vector<std::string>>{{}, {"--trials", "200"}}) {
    std::vector<std::string> argv{"route", path, "--seed", "99"};
    argv.insert(argv.end(), extra.begin(), extra.end());
    std::ostringstream a, b, e;
    cli::run(argv, a, e);
    cli::run(argv, b, e);
    o.require(a.str() == b.str() && !a.str().empty(), "route output not reproducible");
  }
  std::remove(path.c_str());
  if (o.pass) {
    o.detail = std::to_string(graphs.size()) + " graphs round-trip; " +
               std::to_string(argvs.size() + 2) + " argv replays byte-identical";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exponential trap, 4 paths: E = 2^{k+1}-1, k=1..12, < 5 s", criterion_trap4},
      {"exponential trap, 3 paths: E = 2^{k+1}-1, k=1..12", criterion_trap3},
      {"trap k=8: every source s != t has E >= (2^9-1)/2", criterion_all_sources},
      {"standard walk: T(1,n) = (n-1)^2, n=2..50, < 1 s", criterion_square_law},
      {"roundtrip >= 2(n-1)^2 on 1000 chains, equality when standard, < 30 s",
       criterion_roundtrip},
      {"closed forms equal generic solver on 500 chains", criterion_oracle_equivalence},
      {"interval {-n..n}: standard 3n^2, fuzzed max >= (2/3)n^2", criterion_interval},
      {"classifier: random-compass Blue 108, greedy Red 6 on A(0), k=12", criterion_classifier},
      {"adversary: valid, |V| in {2k+1,3k+1}, E >= (2/3)(k/2)^2, ratio >= 3.5, < 60 s",
       criterion_adversary},
      {"greedy/compass/greedy-compass route on 100 Delaunay sets without revisits",
       criterion_deterministic_on_delaunay},
      {"graph text round-trip and byte-identical CLI replays", criterion_plumbing},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu  %s  [%s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
