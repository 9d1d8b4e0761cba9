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

#include "georoute/strategy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace georoute {

LocalView local_view(const EmbeddedGraph& g, VertexId v, const Point& target) {
  return {v, g.point(v), target, g.neighborhood(v)};
}

TransitionDistribution::TransitionDistribution(std::vector<Transition> entries) {
  std::map<VertexId, Rational> merged;
  for (auto& e : entries) {
    if (sign(e.probability) < 0) throw std::invalid_argument("negative transition probability");
    merged[e.to] += e.probability;
  }
  Rational total = 0;
  for (auto& [to, p] : merged) {
    if (sign(p) == 0) continue;
    total += p;
    entries_.push_back({to, p});
  }
  if (total != 1) {
    throw std::invalid_argument("transition probabilities sum to " + to_string(total));
  }
}

TransitionDistribution TransitionDistribution::unit(VertexId to) {
  return TransitionDistribution({{to, Rational(1)}});
}

Rational TransitionDistribution::probability_of(VertexId v) const {
  for (const auto& e : entries_) {
    if (e.to == v) return e.probability;
  }
  return 0;
}

TransitionDistribution Strategy::distribution(const LocalView& view) const {
  if (!has_distribution()) {
    throw std::logic_error(std::string(name()) + " does not expose a distribution");
  }
  if (view.at_target()) return TransitionDistribution::unit(view.vertex);
  if (view.neighbors.empty()) {
    throw std::invalid_argument("vertex " + std::to_string(view.vertex) + " has no neighbors");
  }
  return law(view);
}

VertexId Strategy::sample(const LocalView& view, RngStream& rng) const {
  if (view.at_target()) return view.vertex;
  if (view.neighbors.empty()) {
    throw std::invalid_argument("vertex " + std::to_string(view.vertex) + " has no neighbors");
  }
  if (has_distribution()) return CompiledLaw(law(view)).draw(rng);
  return draw(view, rng);
}

TransitionDistribution Strategy::law(const LocalView&) const {
  throw std::logic_error(std::string(name()) + " does not expose a distribution");
}

VertexId Strategy::draw(const LocalView&, RngStream&) const {
  throw std::logic_error(std::string(name()) + " has neither a distribution nor a sampler");
}

CompiledLaw::CompiledLaw(const TransitionDistribution& d) {
  const auto& entries = d.entries();
  if (entries.empty()) throw std::invalid_argument("cannot sample an empty distribution");
  for (const auto& e : entries) ids_.push_back(e.to);
  const Rational half(1, 2);
  coin_ = entries.size() == 2 && entries[0].probability == half;
  if (coin_ || entries.size() == 1) return;
  const mpz_class two64 = mpz_class(1) << 64;
  Rational cumulative = 0;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    cumulative += entries[i].probability;
    const Rational scaled = cumulative * Rational(two64);
    mpz_class bound;
    mpz_cdiv_q(bound.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (bound >= two64) {
      bounds_.push_back(std::nullopt);
    } else {
      bounds_.push_back(std::stoull(bound.get_str()));
    }
  }
}

VertexId CompiledLaw::draw(RngStream& rng) const {
  if (ids_.size() == 1) return ids_.front();
  if (coin_) return rng.bit() ? ids_[1] : ids_[0];
  const std::uint64_t u = rng.word();
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (!bounds_[i] || u < *bounds_[i]) return ids_[i];
  }
  return ids_.back();
}

namespace {

// Index of the minimum under `less`, ties to the smaller id.
template <typename Less>
const Neighbor& argmin(const std::vector<Neighbor>& ns, Less less) {
  const Neighbor* best = &ns.front();
  for (const auto& n : ns) {
    if (less(n, *best) || (!less(*best, n) && n.id < best->id)) best = &n;
  }
  return *best;
}

}  // namespace

int compare_angle_to(const Point& reference, const Point& a, const Point& b) {
  // cos(angle) = dot / (|x||ref|); compare cos_a against cos_b exactly.
  const Rational da = dot(reference, a);
  const Rational db = dot(reference, b);
  const int sa = sign(da);
  const int sb = sign(db);
  if (sa != sb) return sa > sb ? -1 : 1;
  // Same sign: compare da^2 |b|^2 with db^2 |a|^2.
  const Rational lhs = da * da * squared_norm(b);
  const Rational rhs = db * db * squared_norm(a);
  const int c = sa >= 0 ? sign(rhs - lhs) : sign(lhs - rhs);
  return c;
}

TransitionDistribution GreedyStrategy::law(const LocalView& view) const {
  const auto& best = argmin(view.neighbors, [&](const Neighbor& a, const Neighbor& b) {
    return squared_distance(a.point, view.target) < squared_distance(b.point, view.target);
  });
  return TransitionDistribution::unit(best.id);
}

TransitionDistribution CompassStrategy::law(const LocalView& view) const {
  const Point ref = view.target - view.position;
  const auto& best = argmin(view.neighbors, [&](const Neighbor& a, const Neighbor& b) {
    return compare_angle_to(ref, a.point - view.position, b.point - view.position) < 0;
  });
  return TransitionDistribution::unit(best.id);
}

TransitionDistribution GreedyCompassStrategy::law(const LocalView& view) const {
  const auto& cw = view.neighbors[clockwise_from_ray(view.position, view.target, view.neighbors)];
  const auto& ccw =
      view.neighbors[counterclockwise_from_ray(view.position, view.target, view.neighbors)];
  const int c = cmp(squared_distance(cw.point, view.target), squared_distance(ccw.point, view.target));
  if (c < 0) return TransitionDistribution::unit(cw.id);
  if (c > 0) return TransitionDistribution::unit(ccw.id);
  return TransitionDistribution::unit(std::min(cw.id, ccw.id));
}

TransitionDistribution RandomCompassStrategy::law(const LocalView& view) const {
  const VertexId cw =
      view.neighbors[clockwise_from_ray(view.position, view.target, view.neighbors)].id;
  const VertexId ccw =
      view.neighbors[counterclockwise_from_ray(view.position, view.target, view.neighbors)].id;
  if (cw == ccw) return TransitionDistribution::unit(cw);
  const Rational half(1, 2);
  return TransitionDistribution({{cw, half}, {ccw, half}});
}

TransitionDistribution RandomWalkStrategy::law(const LocalView& view) const {
  const Rational each(1, static_cast<unsigned long>(view.neighbors.size()));
  std::vector<Transition> entries;
  for (const auto& n : view.neighbors) entries.push_back({n.id, each});
  return TransitionDistribution(std::move(entries));
}

const std::vector<std::string>& builtin_strategy_names() {
  static const std::vector<std::string> names{"greedy", "compass", "greedy-compass",
                                              "random-compass", "random-walk"};
  return names;
}

std::unique_ptr<Strategy> make_strategy(std::string_view name) {
  if (name == "greedy") return std::make_unique<GreedyStrategy>();
  if (name == "compass") return std::make_unique<CompassStrategy>();
  if (name == "greedy-compass") return std::make_unique<GreedyCompassStrategy>();
  if (name == "random-compass") return std::make_unique<RandomCompassStrategy>();
  if (name == "random-walk") return std::make_unique<RandomWalkStrategy>();
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

}  // namespace georoute
