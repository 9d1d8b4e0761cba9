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

#include <cstdint>
#include <vector>

#include "georoute/embedded_graph.hpp"
#include "georoute/markov.hpp"
#include "georoute/strategy.hpp"

namespace georoute {

/// The Markov chain a distribution-exposing strategy induces on a graph when
/// routing toward `target`. State ids equal vertex ids; the target row is a
/// unit self-loop. Isolated non-target vertices get a self-loop (stuck).
struct InducedChain {
  GenericChain chain;
  VertexId target;
};

/// Throws std::logic_error for sample-only strategies.
InducedChain induced_chain(const EmbeddedGraph& g, const Strategy& s, VertexId target);

/// Exact expected routing time from `source` to `target` (infinite when the
/// strategy can loop forever).
HittingTimeReport expected_routing_time(const EmbeddedGraph& g, const Strategy& s,
                                        VertexId source, VertexId target);

struct WalkTrace {
  std::vector<VertexId> vertices;  // starts at the source
  std::size_t steps = 0;
  bool reached = false;
  std::uint64_t seed = 0;
};

/// One walk routing toward the point of `routing_target`, stopping on
/// arrival at `stop_at` or after `cap` steps.
WalkTrace route_once(const EmbeddedGraph& g, const Strategy& s, VertexId source,
                     VertexId routing_target, VertexId stop_at, std::size_t cap,
                     RngStream& rng);

struct TrialRecord {
  std::uint64_t seed;
  std::size_t steps;
  bool reached;
};

struct MonteCarloResult {
  MonteCarloSummary summary;
  std::vector<TrialRecord> trials;
};

/// Independent trials on substreams of `master_seed`. Censored trials
/// contribute `cap` steps, so the mean is a lower bound on the truth.
MonteCarloResult monte_carlo_walk(const EmbeddedGraph& g, const Strategy& s, VertexId source,
                                  VertexId target, std::size_t trials, std::size_t cap,
                                  std::uint64_t master_seed);

/// As above but measuring the time to reach `stop_at` while routing toward
/// `routing_target`.
MonteCarloResult monte_carlo_walk(const EmbeddedGraph& g, const Strategy& s, VertexId source,
                                  VertexId routing_target, VertexId stop_at, std::size_t trials,
                                  std::size_t cap, std::uint64_t master_seed);

}  // namespace georoute
