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

#include "georoute/rng.hpp"

namespace georoute {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

RngStream RngStream::substream(std::uint64_t master_seed, std::uint64_t index) {
  return RngStream(mix_seed(master_seed ^ mix_seed(index + 0x632be59bd9b4e019ULL)));
}

bool RngStream::bit() {
  if (buffered_ == 0) {
    buffer_ = engine_();
    buffered_ = 64;
  }
  const bool b = (buffer_ & 1U) != 0;
  buffer_ >>= 1;
  --buffered_;
  ++bits_consumed_;
  return b;
}

std::uint64_t RngStream::word() {
  buffered_ = 0;
  bits_consumed_ += 64;
  return engine_();
}

}  // namespace georoute
