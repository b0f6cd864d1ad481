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

// Rules legality fuzzing shared by the unit tests and the acceptance run.

#ifndef DNDRL_TESTS_FUZZ_UTIL_H_
#define DNDRL_TESTS_FUZZ_UTIL_H_

#include <algorithm>
#include <string>

#include "dndrl/adversaries.h"
#include "dndrl/assets.h"
#include "dndrl/event_log.h"

namespace dndrl::testing {

struct FuzzStats {
  long states = 0;
  long enumerated = 0;
  long enumerated_failed = 0;
  long sampled_illegal = 0;
  long rejected = 0;
  long state_changed_on_reject = 0;
  std::string first_problem;
};

inline Action random_action(const GameState& s, RngStream& rng) {
  Action a;
  a.kind = static_cast<ActionKind>(rng.uniform_int(0, kActionKindCount - 1));
  a.weapon_slot = rng.uniform_int(-1, 3);
  a.target = rng.uniform_int(-1, static_cast<int>(s.entities.size()));
  if (rng.bernoulli(0.3)) a.spell = static_cast<SpellId>(rng.uniform_int(0, kSpellCount - 1));
  if (rng.bernoulli(0.4)) a.direction = kDirections[rng.uniform_int(0, 7)];
  return a;
}

// Walks random fights over every map x hero class combination (enemy class
// drawn at random) and checks every visited state until `n_states` states.
inline FuzzStats legality_fuzz(long n_states, std::uint64_t seed,
                               int illegal_samples = 4) {
  FuzzStats st;
  RngStream rng(seed);
  const auto& maps = default_map_pool();
  long fight = 0;
  while (st.states < n_states) {
    const auto& map = maps[fight % maps.size()];
    const CharacterClass hero = kClasses[(fight / maps.size()) % 4];
    const CharacterClass enemy = kClasses[rng.uniform_int(0, 3)];
    FightSetup setup{map, {bundled_sheet(hero), bundled_sheet(enemy)},
                     derive_seed(seed, 0xf0, fight), 40};
    ++fight;
    GameState s = new_fight(setup);
    while (is_terminal(s) == Outcome::kOngoing && st.states < n_states) {
      ++st.states;
      const auto menu = enumerate_actions(s);
      for (const Action& a : menu) {
        ++st.enumerated;
        GameState copy = s;
        try {
          apply_action(copy, a);
        } catch (const std::exception& e) {
          ++st.enumerated_failed;
          if (st.first_problem.empty()) {
            st.first_problem = std::string("enumerated action failed: ") + e.what();
          }
        }
      }
      int drawn = 0;
      for (int tries = 0; drawn < illegal_samples && tries < 200; ++tries) {
        const Action a = random_action(s, rng);
        if (std::find(menu.begin(), menu.end(), a) != menu.end()) continue;
        ++drawn;
        ++st.sampled_illegal;
        GameState copy = s;
        const std::uint64_t before = state_hash(copy);
        try {
          apply_action(copy, a);
          if (st.first_problem.empty()) {
            st.first_problem = std::string("accepted non-enumerated ") +
                               action_kind_name(a.kind);
          }
        } catch (const IllegalActionError&) {
          ++st.rejected;
          if (state_hash(copy) != before) ++st.state_changed_on_reject;
        } catch (const std::exception& e) {
          if (st.first_problem.empty()) {
            st.first_problem = std::string("wrong exception type: ") + e.what();
          }
        }
      }
      apply_action(s, menu[rng.uniform_int(0, static_cast<int>(menu.size()) - 1)]);
    }
  }
  return st;
}

}  // namespace dndrl::testing

#endif  // DNDRL_TESTS_FUZZ_UTIL_H_
