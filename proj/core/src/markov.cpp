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

#include "georoute/markov.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace georoute {

const Rational& ExpectedTime::value() const {
  if (infinite_) throw std::logic_error("expected time is infinite");
  return value_;
}

double ExpectedTime::approx() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.get_d();
}

std::string ExpectedTime::str() const { return infinite_ ? "inf" : to_string(value_); }

BirthDeathChain::BirthDeathChain(std::size_t n, std::vector<Rational> interior_up) : n_(n) {
  if (n < 2) throw std::invalid_argument("birth-death chain needs at least two states");
  if (interior_up.size() != n - 2) {
    throw std::invalid_argument("expected " + std::to_string(n - 2) +
                                " interior probabilities, got " +
                                std::to_string(interior_up.size()));
  }
  up_.reserve(n);
  up_.emplace_back(1);
  for (auto& p : interior_up) {
    if (sign(p) <= 0 || p >= 1) {
      throw std::invalid_argument("interior probability " + to_string(p) +
                                  " not strictly inside (0, 1)");
    }
    up_.push_back(std::move(p));
  }
  up_.emplace_back(0);
}

BirthDeathChain BirthDeathChain::standard(std::size_t n) {
  if (n < 2) throw std::invalid_argument("birth-death chain needs at least two states");
  return BirthDeathChain(n, std::vector<Rational>(n - 2, Rational(1, 2)));
}

void BirthDeathChain::check_state(std::size_t i) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("state " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
}

Rational BirthDeathChain::up(std::size_t i) const {
  check_state(i);
  return up_[i - 1];
}

Rational BirthDeathChain::odds_down(std::size_t i) const {
  check_state(i);
  if (i == 1) return 0;
  if (i == n_) throw std::out_of_range("P_n is undefined");
  return 1 / up_[i - 1] - 1;
}

Rational BirthDeathChain::odds_up(std::size_t i) const {
  check_state(i);
  if (i == n_) return 0;
  if (i == 1) throw std::out_of_range("Q_1 is undefined");
  return 1 / (1 - up_[i - 1]) - 1;
}

GenericChain::GenericChain(std::size_t states) : rows_(states) {}

void GenericChain::add(std::size_t from, std::size_t to, const Rational& probability) {
  if (from >= rows_.size() || to >= rows_.size()) throw std::out_of_range("state out of range");
  auto& row = rows_[from];
  for (auto& e : row) {
    if (e.to == to) {
      e.probability += probability;
      return;
    }
  }
  row.push_back({to, probability});
}

Rational GenericChain::probability(std::size_t from, std::size_t to) const {
  for (const auto& e : rows_.at(from)) {
    if (e.to == to) return e.probability;
  }
  return 0;
}

void GenericChain::validate() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational total = 0;
    for (const auto& e : rows_[i]) {
      if (sign(e.probability) < 0) {
        throw std::invalid_argument("negative probability in row " + std::to_string(i));
      }
      total += e.probability;
    }
    if (total != 1) {
      throw std::invalid_argument("row " + std::to_string(i) + " sums to " + to_string(total));
    }
  }
}

GenericChain to_generic(const BirthDeathChain& c) {
  const std::size_t n = c.size();
  GenericChain g(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational p = c.up(i);
    if (sign(p) > 0) g.add(i - 1, i, p);
    if (p < 1) g.add(i - 1, i - 2, 1 - p);
  }
  return g;
}

const char* to_string(TimeMethod m) {
  switch (m) {
    case TimeMethod::ClosedForm:
      return "closed-form";
    case TimeMethod::LinearSolve:
      return "linear-solve";
    case TimeMethod::MonteCarlo:
      return "monte-carlo";
  }
  return "?";
}

Rational up_excursion_expectation(const BirthDeathChain& c, std::size_t i) {
  const std::size_t n = c.size();
  if (i < 1 || i >= n) {
    throw std::out_of_range("up excursion needs 1 <= i <= n-1, got " + std::to_string(i));
  }
  // 2 (1 + Q_{i+1} + Q_{i+1}Q_{i+2} + ... + Q_{i+1}...Q_{n-1})
  Rational sum = 1;
  Rational product = 1;
  for (std::size_t j = i + 1; j <= n - 1; ++j) {
    product *= c.odds_up(j);
    sum += product;
  }
  return 2 * sum;
}

Rational down_excursion_expectation(const BirthDeathChain& c, std::size_t i) {
  const std::size_t n = c.size();
  if (i < 2 || i > n) {
    throw std::out_of_range("down excursion needs 2 <= i <= n, got " + std::to_string(i));
  }
  // 2 (1 + P_{i-1} + P_{i-1}P_{i-2} + ... + P_{i-1}...P_2)
  Rational sum = 1;
  Rational product = 1;
  for (std::size_t j = i - 1; j >= 2; --j) {
    product *= c.odds_down(j);
    sum += product;
  }
  return 2 * sum;
}

Rational step_hitting_time(const BirthDeathChain& c, std::size_t i, Direction d) {
  const std::size_t n = c.size();
  if (d == Direction::Up) {
    if (i < 1 || i >= n) throw std::out_of_range("no state above " + std::to_string(i));
    if (i == 1) return 1;
    return 1 + c.odds_down(i) * down_excursion_expectation(c, i);
  }
  if (i < 2 || i > n) throw std::out_of_range("no state below " + std::to_string(i));
  if (i == n) return 1;
  return 1 + c.odds_up(i) * up_excursion_expectation(c, i);
}

Rational hitting_time(const BirthDeathChain& c, std::size_t i, std::size_t j) {
  if (i < 1 || i > c.size() || j < 1 || j > c.size()) throw std::out_of_range("state out of range");
  if (i == j) throw std::invalid_argument("hitting_time needs i != j; use the excursion forms");
  Rational total = 0;
  if (i < j) {
    for (std::size_t s = i; s < j; ++s) total += step_hitting_time(c, s, Direction::Up);
  } else {
    for (std::size_t s = i; s > j; --s) total += step_hitting_time(c, s, Direction::Down);
  }
  return total;
}

Rational roundtrip_expectation(const BirthDeathChain& c) {
  const std::size_t n = c.size();
  return hitting_time(c, 1, n) + hitting_time(c, n, 1);
}

std::vector<ExpectedTime> solve_hitting_times(const GenericChain& c, std::size_t target) {
  const std::size_t n = c.size();
  if (target >= n) throw std::out_of_range("target state out of range");
  c.validate();

  // States that can reach the target at all (reverse search on the support).
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& e : c.row(v)) {
      if (sign(e.probability) > 0) reverse[e.to].push_back(v);
    }
  }
  std::vector<bool> reaches(n, false);
  std::vector<std::size_t> stack{target};
  reaches[target] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : reverse[u]) {
      if (!reaches[w]) {
        reaches[w] = true;
        stack.push_back(w);
      }
    }
  }
  // Anything that can step into a non-reaching state escapes with positive
  // probability, so its expectation is infinite too.
  std::vector<bool> infinite(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (!reaches[v]) {
      infinite[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : reverse[u]) {
      if (!infinite[w] && w != target) {
        infinite[w] = true;
        stack.push_back(w);
      }
    }
  }

  // h(target) = 0; h(v) = 1 + sum_u p(v,u) h(u) over the finite states.
  std::vector<std::size_t> index(n, n);
  std::vector<std::size_t> states;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != target && !infinite[v]) {
      index[v] = states.size();
      states.push_back(v);
    }
  }
  const std::size_t m = states.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    a[r][r] = 1;
    a[r][m] = 1;
    for (const auto& e : c.row(states[r])) {
      if (e.to == target) continue;
      a[r][index[e.to]] -= e.probability;
    }
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && sign(a[pivot][col]) == 0) ++pivot;
    if (pivot == m) throw std::runtime_error("singular hitting-time system");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k <= m; ++k) a[col][k] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || sign(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = col; k <= m; ++k) a[r][k] -= f * a[col][k];
    }
  }

  std::vector<ExpectedTime> out;
  out.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == target) {
      out.push_back(ExpectedTime::finite(0));
    } else if (infinite[v]) {
      out.push_back(ExpectedTime::infinity());
    } else {
      out.push_back(ExpectedTime::finite(a[index[v]][m]));
    }
  }
  return out;
}

IntervalHitting reflecting_interval_max_hit(const BirthDeathChain& c) {
  const std::size_t states = c.size();
  if (states < 3 || states % 2 == 0) {
    throw std::invalid_argument("interval chain needs 2m+1 states with m >= 1");
  }
  const GenericChain g = to_generic(c);
  const std::size_t middle = states / 2;
  const ExpectedTime upper = solve_hitting_times(g, states - 1)[middle];
  const ExpectedTime lower = solve_hitting_times(g, 0)[middle];
  ExpectedTime max = upper;
  if (upper.is_infinite() || lower.is_infinite()) {
    max = ExpectedTime::infinity();
  } else if (lower.value() > upper.value()) {
    max = lower;
  }
  return {upper, lower, max};
}

}  // namespace georoute
