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

#include "georoute/classify.hpp"

#include <stdexcept>

#include "georoute/analysis.hpp"

namespace georoute {

const char* to_string(Color c) { return c == Color::Blue ? "Blue" : "Red"; }

Rational blue_threshold(std::size_t k) {
  const Rational half(static_cast<unsigned long>(k / 2));
  Rational t = half * half * 2 / 3;
  t.canonicalize();
  return t;
}

ChainColor classify_chain(const Strategy& s, const ChainInstance& chain,
                          const ClassifyOptions& options) {
  const std::size_t k = chain.k();
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("chain length must be even");
  const EmbeddedGraph g = chain_graph(chain);
  const VertexId source = k / 2 - 1;
  const VertexId inner = k - 1;  // a_k
  const VertexId outer = 0;      // a_1
  const VertexId t = k;

  ChainColor result;
  result.threshold = blue_threshold(k);
  if (s.has_distribution()) {
    const InducedChain induced = induced_chain(g, s, t);
    result.method = TimeMethod::LinearSolve;
    result.expectation = solve_hitting_times(induced.chain, inner).at(source);
    result.outward = solve_hitting_times(induced.chain, outer).at(source);
  } else {
    const std::size_t cap = options.cap_factor * k * k;
    const MonteCarloResult mc =
        monte_carlo_walk(g, s, source, t, inner, options.trials, cap, options.seed);
    result.method = TimeMethod::MonteCarlo;
    Rational mean(mc.summary.mean);
    result.expectation = ExpectedTime::finite(mean);
    result.monte_carlo = mc.summary;
  }
  result.color = result.expectation.at_least(result.threshold) ? Color::Blue : Color::Red;
  return result;
}

}  // namespace georoute
