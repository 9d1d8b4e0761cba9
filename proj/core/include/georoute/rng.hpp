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
#include <random>

namespace georoute {

/// Deterministic source of random bits for one walk. Single owner; derive
/// one stream per trial with `substream`.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Stream for trial `index` of an experiment seeded with `master_seed`.
  static RngStream substream(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t seed() const { return seed_; }

  /// One fresh bit. Bits are drawn from 64-bit words least-significant first.
  bool bit();
  /// 64 fresh bits (discards any partially consumed word).
  std::uint64_t word();

  std::uint64_t bits_consumed() const { return bits_consumed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int buffered_ = 0;
  std::uint64_t bits_consumed_ = 0;
};

/// splitmix64 finalizer; used to decorrelate seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace georoute
