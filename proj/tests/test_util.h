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

#ifndef DNDRL_TESTS_TEST_UTIL_H_
#define DNDRL_TESTS_TEST_UTIL_H_

#include <memory>
#include <string>

#include "dndrl/assets.h"
#include "dndrl/engine.h"

namespace dndrl::testing {

inline std::shared_ptr<const BattleMap> map_from(const std::string& text) {
  return std::make_shared<const BattleMap>(load_map(text, "test"));
}

// Fight on `map` with the hero as the first to act and a fresh turn.
inline GameState make_fight(std::shared_ptr<const BattleMap> map,
                            CharacterClass hero, CharacterClass enemy,
                            std::uint64_t seed = 1) {
  FightSetup setup;
  setup.map = std::move(map);
  setup.sheets = {bundled_sheet(hero), bundled_sheet(enemy)};
  setup.seed = seed;
  GameState s = new_fight(setup);
  s.initiative = {0, 1};
  s.active_index = 0;
  for (EntityState& e : s.entities) {
    e.economy = Economy{};
    e.economy.movement_left = e.speed();
  }
  return s;
}

inline GameState make_fight(const std::string& map_text, CharacterClass hero,
                            CharacterClass enemy, std::uint64_t seed = 1) {
  return make_fight(map_from(map_text), hero, enemy, seed);
}

inline bool contains(const std::vector<Action>& menu, const Action& a) {
  for (const Action& m : menu) {
    if (m == a) return true;
  }
  return false;
}

}  // namespace dndrl::testing

#endif  // DNDRL_TESTS_TEST_UTIL_H_
