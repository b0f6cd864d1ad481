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

#ifndef DNDRL_ADVERSARIES_H_
#define DNDRL_ADVERSARIES_H_

#include <memory>
#include <string>

#include "dndrl/engine.h"

namespace dndrl {

// A decision maker for the active entity. `rng` is the policy's own stream;
// combat dice always come from the state's stream.
class Policy {
 public:
  virtual ~Policy() = default;
  // Must return a member of enumerate_actions(state).
  virtual Action choose(const GameState& state, RngStream& rng) = 0;
  virtual std::string name() const = 0;
  // Called when a new fight starts.
  virtual void reset() {}
};

// Expected damage of an attack or damaging spell against its target, taking
// hit chance, advantage, cover and save odds into account (critical hits
// count as ordinary hits). 0 for anything
// that does not deal damage.
double expected_damage(const GameState& state, const Action& action);

// Scripted baseline: action surge after a landed hit, best expected-damage
// attack on the nearest visible enemy, second wind below half hp, a greedy
// step toward the nearest enemy while the action is unspent, end turn.
Action rules_policy(const GameState& state);

// Uniform over enumerate_actions(state).
Action random_policy(const GameState& state, RngStream& rng);

class RulesPolicy : public Policy {
 public:
  Action choose(const GameState& state, RngStream&) override {
    return rules_policy(state);
  }
  std::string name() const override { return "rules"; }
};

class RandomPolicy : public Policy {
 public:
  Action choose(const GameState& state, RngStream& rng) override {
    return random_policy(state, rng);
  }
  std::string name() const override { return "random"; }
};

// Ends every turn immediately.
class InertPolicy : public Policy {
 public:
  Action choose(const GameState&, RngStream&) override {
    return Action::end_turn();
  }
  std::string name() const override { return "inert"; }
};

}  // namespace dndrl

#endif  // DNDRL_ADVERSARIES_H_
