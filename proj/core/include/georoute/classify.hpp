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
#include <cstdint>
#include <optional>

#include "georoute/constructions.hpp"
#include "georoute/markov.hpp"
#include "georoute/strategy.hpp"

namespace georoute {

enum class Color { Red, Blue };
const char* to_string(Color c);

struct ChainColor {
  Color color = Color::Red;
  /// Expected time from a_{k/2} to a_k while routing toward t.
  ExpectedTime expectation = ExpectedTime::finite(0);
  Rational threshold;
  TimeMethod method = TimeMethod::LinearSolve;
  /// Expected time from a_{k/2} to a_1 (exact methods only).
  std::optional<ExpectedTime> outward;
  std::optional<MonteCarloSummary> monte_carlo;
};

/// Fallback used when the strategy only samples.
struct ClassifyOptions {
  std::size_t trials = 1000;
  std::size_t cap_factor = 10;  // cap = cap_factor * k^2
  std::uint64_t seed = 1;
};

/// (2/3) * floor(k/2)^2.
Rational blue_threshold(std::size_t k);

/// Runs `s` on the chain path plus the isolated vertex t, starting at
/// a_{k/2}, and colors the chain Blue iff reaching a_k takes at least
/// blue_threshold(k) expected steps. Throws std::invalid_argument for odd k.
ChainColor classify_chain(const Strategy& s, const ChainInstance& chain,
                          const ClassifyOptions& options = {});

}  // namespace georoute
