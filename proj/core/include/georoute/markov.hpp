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
#include <string>
#include <vector>

#include "georoute/rational.hpp"

namespace georoute {

/// An expected time that may be infinite (target not reached almost surely).
class ExpectedTime {
 public:
  static ExpectedTime finite(Rational value) {
    value.canonicalize();
    return ExpectedTime(false, std::move(value));
  }
  static ExpectedTime infinity() { return ExpectedTime(true, 0); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  bool at_least(const Rational& bound) const { return infinite_ || value_ >= bound; }
  double approx() const;
  /// Reduced fraction, or "inf".
  std::string str() const;

  friend bool operator==(const ExpectedTime&, const ExpectedTime&) = default;

 private:
  ExpectedTime(bool infinite, Rational value) : infinite_(infinite), value_(std::move(value)) {}
  bool infinite_;
  Rational value_;
};

/// Birth-death chain on states 1..n with reflecting ends: p(1,2) = p(n,n-1)
/// = 1 and, for 2 <= i <= n-1, p(i,i+1) = pi_i = 1 - p(i,i-1). States are
/// numbered from 1 to match the usual presentation.
class BirthDeathChain {
 public:
  /// `interior_up` holds pi_2..pi_{n-1} (n - 2 values), each strictly in
  /// (0, 1). Throws std::invalid_argument otherwise or if n < 2.
  BirthDeathChain(std::size_t n, std::vector<Rational> interior_up);

  /// pi_i = 1/2 for every interior state.
  static BirthDeathChain standard(std::size_t n);

  std::size_t size() const { return n_; }
  /// pi_i with pi_1 = 1 and pi_n = 0.
  Rational up(std::size_t i) const;
  /// P_i = 1/pi_i - 1 for interior i; P_1 = 0.
  Rational odds_down(std::size_t i) const;
  /// Q_i = 1/(1 - pi_i) - 1 for interior i; Q_n = 0.
  Rational odds_up(std::size_t i) const;

 private:
  void check_state(std::size_t i) const;

  std::size_t n_;
  std::vector<Rational> up_;  // index i - 1
};

/// Finite chain with exact row-stochastic transitions; states 0..size-1.
class GenericChain {
 public:
  struct Entry {
    std::size_t to;
    Rational probability;
  };

  explicit GenericChain(std::size_t states);

  std::size_t size() const { return rows_.size(); }
  /// Adds mass to (from, to). Rows are not checked until `validate`.
  void add(std::size_t from, std::size_t to, const Rational& probability);
  const std::vector<Entry>& row(std::size_t from) const { return rows_.at(from); }
  Rational probability(std::size_t from, std::size_t to) const;

  /// Throws std::invalid_argument unless every row is nonnegative and sums
  /// to exactly 1.
  void validate() const;

 private:
  std::vector<std::vector<Entry>> rows_;
};

/// Converts a birth-death chain; state i maps to index i - 1.
GenericChain to_generic(const BirthDeathChain& c);

enum class TimeMethod { ClosedForm, LinearSolve, MonteCarlo };
const char* to_string(TimeMethod m);

struct MonteCarloSummary {
  std::size_t trials = 0;
  std::size_t cap = 0;
  std::uint64_t master_seed = 0;
  /// Censored mean: trials hitting the cap count as `cap` steps.
  double mean = 0;
  double standard_error = 0;
  double censored_fraction = 0;
};

struct HittingTimeReport {
  std::size_t source = 0;
  std::size_t target = 0;
  ExpectedTime expectation = ExpectedTime::finite(0);
  TimeMethod method = TimeMethod::LinearSolve;
  std::optional<MonteCarloSummary> monte_carlo;
};

/// E{T+_{i,i}}: return time to i in the chain on {i..n}, reflecting at i
/// and n. Requires 1 <= i <= n-1.
Rational up_excursion_expectation(const BirthDeathChain& c, std::size_t i);

/// E{T-_{i,i}}: return time to i in the chain on {1..i}, reflecting at 1
/// and i. Requires 2 <= i <= n.
Rational down_excursion_expectation(const BirthDeathChain& c, std::size_t i);

enum class Direction { Up, Down };

/// E{T_{i,i+1}} = 1 + P_i E{T-_{i,i}} or E{T_{i,i-1}} = 1 + Q_i E{T+_{i,i}}.
Rational step_hitting_time(const BirthDeathChain& c, std::size_t i, Direction d);

/// E{T_{i,j}} for i != j as the telescoping sum of single steps.
Rational hitting_time(const BirthDeathChain& c, std::size_t i, std::size_t j);

/// E{T_{1,n}} + E{T_{n,1}}; never below 2(n-1)^2.
Rational roundtrip_expectation(const BirthDeathChain& c);

/// Expected hitting time of `target` from every state by exact Gaussian
/// elimination. States that fail to reach the target almost surely get
/// the infinity flag.
std::vector<ExpectedTime> solve_hitting_times(const GenericChain& c, std::size_t target);

struct IntervalHitting {
  ExpectedTime to_upper;  // E{T_{0,n}}
  ExpectedTime to_lower;  // E{T_{0,-n}}
  ExpectedTime max;
};

/// For a birth-death chain on 2m+1 states read as {-m..m}, the expected
/// times from the middle state to each end (via solve_hitting_times).
IntervalHitting reflecting_interval_max_hit(const BirthDeathChain& c);

}  // namespace georoute
