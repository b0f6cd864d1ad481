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

#ifndef DNDRL_RNG_H_
#define DNDRL_RNG_H_

#include <cstdint>
#include <deque>
#include <initializer_list>

namespace dndrl {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Stable seed derivation for per-fight / per-episode streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                          std::uint64_t b = 0);

// Counter-based random stream. Draw n is a pure function of (seed, n), so a
// stream can be copied, split and replayed without any shared state. Every
// stochastic decision in the library draws from one of these.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0) : seed_(seed) {}

  std::uint64_t next_u64();

  // Uniform integer in [lo, hi]; exactly one draw.
  int uniform_int(int lo, int hi);

  // Uniform double in [0, 1); exactly one draw.
  double uniform01();

  bool bernoulli(double p) { return uniform01() < p; }

  // Independent child stream. Does not advance this stream.
  RngStream split(std::uint64_t stream_id) const;

  // Test hook: the next uniform_int() calls return these faces in order.
  // Each face must lie in the requested range. Forced draws still advance
  // position().
  void force(std::initializer_list<int> faces);
  bool has_forced() const { return !forced_.empty(); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }

  friend bool operator==(const RngStream& a, const RngStream& b) {
    return a.seed_ == b.seed_ && a.position_ == b.position_ &&
           a.forced_ == b.forced_;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::deque<int> forced_;
};

}  // namespace dndrl

#endif  // DNDRL_RNG_H_
