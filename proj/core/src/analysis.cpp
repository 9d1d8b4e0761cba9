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

#include "georoute/analysis.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace georoute {

namespace {

// One step law per vertex, built on first visit. Sampling through it is
// identical to Strategy::sample, minus the repeated exact geometry.
class StepCache {
 public:
  StepCache(const EmbeddedGraph& g, const Strategy& s, const Point& t)
      : g_(g), s_(s), t_(t), laws_(s.has_distribution() ? g.vertex_count() : 0) {}

  VertexId step(VertexId at, RngStream& rng) {
    if (laws_.empty()) return s_.sample(local_view(g_, at, t_), rng);
    auto& law = laws_[at];
    if (!law) law.emplace(s_.distribution(local_view(g_, at, t_)));
    return law->draw(rng);
  }

 private:
  const EmbeddedGraph& g_;
  const Strategy& s_;
  const Point& t_;
  std::vector<std::optional<CompiledLaw>> laws_;
};

}  // namespace

InducedChain induced_chain(const EmbeddedGraph& g, const Strategy& s, VertexId target) {
  if (!s.has_distribution()) {
    throw std::logic_error(std::string(s.name()) + " is sample-only; use monte_carlo_walk");
  }
  const Point& t = g.point(target);
  GenericChain chain(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == target || g.degree(v) == 0) {
      chain.add(v, v, 1);
      continue;
    }
    const TransitionDistribution law = s.distribution(local_view(g, v, t));
    for (const auto& e : law.entries()) {
      chain.add(v, e.to, e.probability);
    }
  }
  return {std::move(chain), target};
}

HittingTimeReport expected_routing_time(const EmbeddedGraph& g, const Strategy& s,
                                        VertexId source, VertexId target) {
  HittingTimeReport report;
  report.source = source;
  report.target = target;
  report.method = TimeMethod::LinearSolve;
  if (source == target) {
    report.expectation = ExpectedTime::finite(0);
    return report;
  }
  const InducedChain induced = induced_chain(g, s, target);
  report.expectation = solve_hitting_times(induced.chain, target).at(source);
  return report;
}

WalkTrace route_once(const EmbeddedGraph& g, const Strategy& s, VertexId source,
                     VertexId routing_target, VertexId stop_at, std::size_t cap,
                     RngStream& rng) {
  WalkTrace trace;
  trace.seed = rng.seed();
  trace.vertices.push_back(source);
  StepCache steps(g, s, g.point(routing_target));
  VertexId at = source;
  while (at != stop_at && trace.steps < cap) {
    if (g.degree(at) == 0) break;  // stuck
    at = steps.step(at, rng);
    trace.vertices.push_back(at);
    ++trace.steps;
  }
  trace.reached = at == stop_at;
  if (!trace.reached) trace.steps = cap;
  return trace;
}

MonteCarloResult monte_carlo_walk(const EmbeddedGraph& g, const Strategy& s, VertexId source,
                                  VertexId target, std::size_t trials, std::size_t cap,
                                  std::uint64_t master_seed) {
  return monte_carlo_walk(g, s, source, target, target, trials, cap, master_seed);
}

MonteCarloResult monte_carlo_walk(const EmbeddedGraph& g, const Strategy& s, VertexId source,
                                  VertexId routing_target, VertexId stop_at, std::size_t trials,
                                  std::size_t cap, std::uint64_t master_seed) {
  if (cap < 1) throw std::invalid_argument("step cap must be at least 1");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  MonteCarloResult out;
  out.trials.reserve(trials);
  StepCache cache(g, s, g.point(routing_target));
  double sum = 0;
  double sum_sq = 0;
  std::size_t censored = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    RngStream rng = RngStream::substream(master_seed, i);
    const std::uint64_t seed = rng.seed();
    VertexId at = source;
    std::size_t steps = 0;
    while (at != stop_at && steps < cap && g.degree(at) > 0) {
      at = cache.step(at, rng);
      ++steps;
    }
    const bool reached = at == stop_at;
    if (!reached) {
      steps = cap;
      ++censored;
    }
    out.trials.push_back({seed, steps, reached});
    sum += static_cast<double>(steps);
    sum_sq += static_cast<double>(steps) * static_cast<double>(steps);
  }
  const double n = static_cast<double>(trials);
  auto& summary = out.summary;
  summary.trials = trials;
  summary.cap = cap;
  summary.master_seed = master_seed;
  summary.mean = sum / n;
  const double var = trials > 1 ? std::max(0.0, (sum_sq - n * summary.mean * summary.mean) / (n - 1)) : 0.0;
  summary.standard_error = std::sqrt(var / n);
  summary.censored_fraction = static_cast<double>(censored) / n;
  return out;
}

}  // namespace georoute
