// Copyright 2026 The dndrl Authors
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

#include "dndrl/rng.h"

#include <stdexcept>
#include <string>

namespace dndrl {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                          std::uint64_t b) {
  std::uint64_t h = mix64(base + kGolden);
  h = mix64(h ^ (a + 0x632BE59BD9B4E019ULL));
  h = mix64(h ^ (b + 0x85157AF5ULL));
  return h;
}

std::uint64_t RngStream::next_u64() {
  ++position_;
  return mix64(seed_ + position_ * kGolden);
}

int RngStream::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  if (!forced_.empty()) {
    const int face = forced_.front();
    forced_.pop_front();
    ++position_;
    if (face < lo || face > hi) {
      throw std::logic_error("forced face " + std::to_string(face) +
                             " outside [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    }
    return face;
  }
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Multiply-high reduction; bias is below span / 2^64.
  const auto wide = static_cast<unsigned __int128>(next_u64()) * span;
  return lo + static_cast<int>(wide >> 64);
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RngStream RngStream::split(std::uint64_t stream_id) const {
  return RngStream(derive_seed(seed_, stream_id, 0xA5A5));
}

void RngStream::force(std::initializer_list<int> faces) {
  forced_.insert(forced_.end(), faces.begin(), faces.end());
}

}  // namespace dndrl
