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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace georoute {

/// Exact rational number. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced fraction text: "3", "-7/2".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Rational make_rational(long numerator, long denominator = 1);

/// 2^exponent as an exact rational.
Rational power_of_two(unsigned exponent);

}  // namespace georoute
