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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "georoute/classify.hpp"
#include "georoute/constructions.hpp"
#include "georoute/markov.hpp"
#include "georoute/strategy.hpp"

namespace georoute {

enum class AdversaryCase { TwoBlue, TwoRed, ThreeBlue };
const char* to_string(AdversaryCase c);

struct ClassifiedChain {
  std::string label;  // e.g. "B(300)"
  ChainColor color;
};

struct AdversaryCertificate {
  std::string strategy;
  std::size_t k = 0;
  AdversaryCase which = AdversaryCase::TwoBlue;
  EmbeddedGraph graph;  // source() and target() are set
  VertexId source = 0;
  VertexId target = 0;
  /// In the order they were classified.
  std::vector<ClassifiedChain> colors;
  HittingTimeReport routing;
  Rational threshold;
  ValidationReport validator;

  /// Valid subdivision and routing time >= threshold.
  bool holds() const;
};

struct AdversaryOptions {
  ClassifyOptions classify;
  /// Used to estimate the routing time when the strategy only samples.
  std::size_t trials = 1000;
  std::size_t cap_factor = 10;
  std::uint64_t seed = 1;
};

/// Builds a convex subdivision on which `s` needs at least quadratic
/// expected time. Chains are classified lazily: two Blue chains sharing an
/// angle, then two Red chains on a common line, then one Blue chain at each
/// of 0, 120 and 240 degrees. Throws std::invalid_argument unless k is even
/// and >= 4, and std::runtime_error when no case applies (only possible with
/// noisy Monte Carlo colors).
AdversaryCertificate adversary(const Strategy& s, std::size_t k,
                               const AdversaryOptions& options = {});

/// One `key=value` per line; expectations as reduced fractions or "inf".
void serialize_certificate(std::ostream& out, const AdversaryCertificate& c);
std::string serialize_certificate(const AdversaryCertificate& c);

}  // namespace georoute
