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
#include <memory>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "georoute/embedded_graph.hpp"
#include "georoute/rng.hpp"

namespace georoute {

/// Everything a memoryless strategy may look at: the current vertex, the
/// target's coordinates and the neighborhood.
struct LocalView {
  VertexId vertex;
  Point position;
  Point target;
  std::vector<Neighbor> neighbors;

  bool at_target() const { return position == target; }
};

LocalView local_view(const EmbeddedGraph& g, VertexId v, const Point& target);

struct Transition {
  VertexId to;
  Rational probability;
};

/// Exact law of one routing step. Entries have distinct ids, positive
/// probabilities summing to exactly one, and are ordered by id.
class TransitionDistribution {
 public:
  TransitionDistribution() = default;
  /// Merges duplicate ids, drops zero mass, and checks the invariants.
  explicit TransitionDistribution(std::vector<Transition> entries);

  static TransitionDistribution unit(VertexId to);

  const std::vector<Transition>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_deterministic() const { return entries_.size() == 1; }
  Rational probability_of(VertexId v) const;

 private:
  std::vector<Transition> entries_;
};

/// A distribution prepared for repeated sampling. This is the one sampling
/// rule for every distribution-exposing strategy: unit mass consumes no
/// randomness, a fair coin between two vertices consumes one bit (set picks
/// the larger id), anything else consumes a 64-bit word u and picks the
/// first entry with u < 2^64 * cumulative mass.
class CompiledLaw {
 public:
  explicit CompiledLaw(const TransitionDistribution& d);
  VertexId draw(RngStream& rng) const;

 private:
  std::vector<VertexId> ids_;
  // ceil(2^64 * cumulative) for all but the last entry; nullopt when it
  // reaches 2^64.
  std::vector<std::optional<std::uint64_t>> bounds_;
  bool coin_ = false;
};

/// Memoryless routing contract f(v, t, N(v), B). Implementations hold no
/// state between calls. At the target every strategy stays put.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string_view name() const = 0;

  /// False for sample-only strategies; exact analyses then fall back to
  /// Monte Carlo.
  virtual bool has_distribution() const { return true; }

  /// Throws std::logic_error for sample-only strategies and
  /// std::invalid_argument for an empty neighborhood away from the target.
  TransitionDistribution distribution(const LocalView& view) const;

  /// Next vertex, drawing fresh bits from `rng` as needed. Strategies with
  /// a distribution are sampled through CompiledLaw; `draw` is used only by
  /// sample-only strategies.
  VertexId sample(const LocalView& view, RngStream& rng) const;

 protected:
  /// Called only away from the target with a nonempty neighborhood.
  virtual TransitionDistribution law(const LocalView& view) const;
  /// Sample-only strategies override this (and has_distribution).
  virtual VertexId draw(const LocalView& view, RngStream& rng) const;
};

/// Step to the neighbor closest to t; ties to the smaller id.
class GreedyStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "greedy"; }

 protected:
  TransitionDistribution law(const LocalView& view) const override;
};

/// Step to the neighbor making the smallest angle with segment vt.
class CompassStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "compass"; }

 protected:
  TransitionDistribution law(const LocalView& view) const override;
};

/// Of cw_t(v) and ccw_t(v), step to the one closer to t.
class GreedyCompassStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "greedy-compass"; }

 protected:
  TransitionDistribution law(const LocalView& view) const override;
};

/// Fair coin between cw_t(v) and ccw_t(v); one bit per step.
class RandomCompassStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "random-compass"; }

 protected:
  TransitionDistribution law(const LocalView& view) const override;
};

/// Uniform over N(v).
class RandomWalkStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "random-walk"; }

 protected:
  TransitionDistribution law(const LocalView& view) const override;
};

/// Names accepted by make_strategy, in a fixed order.
const std::vector<std::string>& builtin_strategy_names();

/// Throws std::invalid_argument for an unknown name.
std::unique_ptr<Strategy> make_strategy(std::string_view name);

/// Exact comparison of the unsigned angles between (a) and (b) and the
/// reference direction: negative if a's angle is smaller, 0 if equal.
int compare_angle_to(const Point& reference, const Point& a, const Point& b);

}  // namespace georoute
