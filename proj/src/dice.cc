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

#include "dndrl/dice.h"

#include <algorithm>
#include <stdexcept>

namespace dndrl {

RollSpec::RollSpec(int count, int sides, int modifier)
    : count_(count), sides_(sides), modifier_(modifier) {
  if (count < 1) throw std::invalid_argument("RollSpec: count must be >= 1");
  switch (sides) {
    case 4: case 6: case 8: case 10: case 12: case 20:
      break;
    default:
      throw std::invalid_argument("RollSpec: unsupported die d" +
                                  std::to_string(sides));
  }
}

std::string RollSpec::to_string() const {
  std::string s = std::to_string(count_) + "d" + std::to_string(sides_);
  if (modifier_ > 0) s += "+" + std::to_string(modifier_);
  if (modifier_ < 0) s += std::to_string(modifier_);
  return s;
}

DiceRoll roll_detailed(const RollSpec& spec, RngStream& rng, bool critical) {
  DiceRoll out;
  const int n = critical ? spec.count() * 2 : spec.count();
  out.faces.reserve(n);
  int sum = 0;
  for (int i = 0; i < n; ++i) {
    const int face = rng.uniform_int(1, spec.sides());
    out.faces.push_back(face);
    sum += face;
  }
  out.modifier = spec.modifier();
  out.total = sum + spec.modifier();
  return out;
}

int roll(const RollSpec& spec, RngStream& rng) {
  return roll_detailed(spec, rng).total;
}

int ability_modifier(int score) {
  if (score < 1 || score > 30) {
    throw std::out_of_range("ability score " + std::to_string(score) +
                            " outside 1..30");
  }
  // Floor division; (score - 10) may be negative.
  const int d = score - 10;
  return d >= 0 ? d / 2 : -((-d + 1) / 2);
}

Advantage combine_advantage(bool any_advantage, bool any_disadvantage) {
  if (any_advantage == any_disadvantage) return Advantage::kNormal;
  return any_advantage ? Advantage::kAdvantage : Advantage::kDisadvantage;
}

const char* advantage_name(Advantage a) {
  switch (a) {
    case Advantage::kNormal: return "normal";
    case Advantage::kAdvantage: return "advantage";
    case Advantage::kDisadvantage: return "disadvantage";
  }
  return "normal";
}

D20Outcome roll_d20(int modifier, Advantage advantage, RngStream& rng) {
  D20Outcome out;
  out.advantage = advantage;
  out.dice.push_back(rng.uniform_int(1, 20));
  if (advantage != Advantage::kNormal) out.dice.push_back(rng.uniform_int(1, 20));
  if (advantage == Advantage::kAdvantage) {
    out.natural = *std::max_element(out.dice.begin(), out.dice.end());
  } else if (advantage == Advantage::kDisadvantage) {
    out.natural = *std::min_element(out.dice.begin(), out.dice.end());
  } else {
    out.natural = out.dice.front();
  }
  out.total = out.natural + modifier;
  out.critical_hit = out.natural == 20;
  out.critical_miss = out.natural == 1;
  return out;
}

}  // namespace dndrl
