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

#ifndef DNDRL_DICE_H_
#define DNDRL_DICE_H_

#include <string>
#include <vector>

#include "dndrl/rng.h"

namespace dndrl {

// NdS+M. Only the standard polyhedral dice are allowed.
class RollSpec {
 public:
  RollSpec(int count, int sides, int modifier = 0);

  int count() const { return count_; }
  int sides() const { return sides_; }
  int modifier() const { return modifier_; }
  int min() const { return count_ + modifier_; }
  int max() const { return count_ * sides_ + modifier_; }
  double mean() const { return count_ * (sides_ + 1) / 2.0 + modifier_; }

  RollSpec with_modifier(int modifier) const {
    return RollSpec(count_, sides_, modifier);
  }

  std::string to_string() const;

  friend bool operator==(const RollSpec&, const RollSpec&) = default;

 private:
  int count_;
  int sides_;
  int modifier_;
};

struct DiceRoll {
  std::vector<int> faces;
  int modifier = 0;
  int total = 0;
};

// Rolls the spec; a critical roll doubles the dice but not the modifier.
DiceRoll roll_detailed(const RollSpec& spec, RngStream& rng,
                       bool critical = false);
int roll(const RollSpec& spec, RngStream& rng);

// floor((score - 10) / 2); score must be in 1..30.
int ability_modifier(int score);

enum class Advantage { kNormal, kAdvantage, kDisadvantage };

// Any advantage source and any disadvantage source cancel to normal.
Advantage combine_advantage(bool any_advantage, bool any_disadvantage);
const char* advantage_name(Advantage a);

struct D20Outcome {
  int natural = 1;
  int total = 1;
  bool critical_hit = false;
  bool critical_miss = false;
  Advantage advantage = Advantage::kNormal;
  std::vector<int> dice;  // both dice when rolled with (dis)advantage
};

D20Outcome roll_d20(int modifier, Advantage advantage, RngStream& rng);

}  // namespace dndrl

#endif  // DNDRL_DICE_H_
