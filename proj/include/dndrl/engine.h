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

// Turn state machine: initiative, legal-action enumeration and action
// application. The enumeration is the single source of legality; apply_action
// rejects anything it does not list.

#ifndef DNDRL_ENGINE_H_
#define DNDRL_ENGINE_H_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dndrl/game_state.h"
#include "dndrl/rules.h"

namespace dndrl {

inline constexpr int kDefaultMaxRounds = 500;

struct FightSetup {
  std::shared_ptr<const BattleMap> map;
  // [0] starts on the map's 'P' spawn (hero), [1] on 'E' (enemy).
  std::array<std::shared_ptr<const CharacterSheet>, 2> sheets;
  std::uint64_t seed = 0;
  int max_rounds = kDefaultMaxRounds;
};

// Places both combatants, rolls initiative from the fight's stream and starts
// the first turn.
GameState new_fight(const FightSetup& setup);

// d20 + DEX modifier, descending; ties go to the higher DEX score, then to a
// random key drawn only when such a tie exists.
std::vector<int> roll_initiative(const GameState& state, RngStream& rng);

bool feature_available(const GameState& state, int entity, FeatureId feature);

// Fixed order: end turn, weapon attacks (per weapon slot: melee then ranged),
// off-hand attacks, dash / dash bonus / disengage / disengage bonus / dodge,
// the eight moves, prone or stand, second wind, action surge, spells.
std::vector<Action> enumerate_actions(const GameState& state);

// Applies `action` for the active entity. Throws IllegalActionError if it is
// not in enumerate_actions(state). Returned events are in occurrence order;
// reactions (opportunity attacks) precede the move that provoked them.
std::vector<CombatEvent> apply_action(GameState& state, const Action& action);

enum class Outcome { kOngoing, kHeroWon, kHeroLost, kTie };
const char* outcome_name(Outcome o);

Outcome is_terminal(const GameState& state);

// Menu line for the prompt, e.g. "attack enemy with ranged weapon: dagger".
std::string describe_action(const GameState& state, const Action& action);

}  // namespace dndrl

#endif  // DNDRL_ENGINE_H_
