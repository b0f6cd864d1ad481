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

#include <sstream>

#include <gtest/gtest.h>

#include "dndrl/adversaries.h"
#include "dndrl/assets.h"
#include "dndrl/event_log.h"

namespace dndrl {
namespace {

FightLog play_logged(std::uint64_t seed, CharacterClass a, CharacterClass b,
                     const char* map = "ruins") {
  FightSetup setup{bundled_map(map), {bundled_sheet(a), bundled_sheet(b)}, seed, 80};
  FightLog log = start_log(setup, {"random", "rules"});
  GameState s = new_fight(setup);
  RngStream policy(seed + 100);
  while (is_terminal(s) == Outcome::kOngoing) {
    const Action act = s.active().team == Team::kHero ? random_policy(s, policy)
                                                      : rules_policy(s);
    for (auto& e : apply_action(s, act)) log.events.push_back(e);
  }
  finish_log(log, s);
  return log;
}

std::string to_text(const FightLog& log) {
  std::ostringstream out;
  write_log(log, out);
  return out.str();
}

TEST(EventLog, RoundTripAndReplay) {
  for (CharacterClass c : kClasses) {
    const FightLog log = play_logged(3, c, CharacterClass::kWizard);
    ASSERT_TRUE(log.complete);
    std::istringstream in(to_text(log));
    const FightLog back = read_log(in);
    EXPECT_EQ(back.events, log.events);
    EXPECT_EQ(back.final_hash, log.final_hash);
    EXPECT_EQ(back.outcome, log.outcome);
    EXPECT_EQ(to_text(back), to_text(log));
    const ReplayResult r = replay(back);
    EXPECT_EQ(r.hash, log.final_hash);
    EXPECT_EQ(r.events, log.events);
  }
}

TEST(EventLog, SameSeedSameBytes) {
  EXPECT_EQ(to_text(play_logged(9, CharacterClass::kRogue, CharacterClass::kCleric)),
            to_text(play_logged(9, CharacterClass::kRogue, CharacterClass::kCleric)));
  EXPECT_NE(to_text(play_logged(9, CharacterClass::kRogue, CharacterClass::kCleric)),
            to_text(play_logged(10, CharacterClass::kRogue, CharacterClass::kCleric)));
}

TEST(EventLog, TruncatedLogIsAnError) {
  const std::string text = to_text(play_logged(4, CharacterClass::kFighter,
                                               CharacterClass::kFighter));
  const std::string no_footer = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  std::istringstream in(no_footer);
  EXPECT_THROW(read_log(in), LogError);
  std::istringstream cut(text.substr(0, text.size() / 2));
  EXPECT_THROW(read_log(cut), LogError);
  std::istringstream empty("");
  EXPECT_THROW(read_log(empty), LogError);
}

TEST(EventLog, TamperingIsDetected) {
  FightLog log = play_logged(5, CharacterClass::kFighter, CharacterClass::kRogue);
  FightLog bad_hash = log;
  bad_hash.final_hash ^= 1;
  EXPECT_THROW(replay(bad_hash), LogError);
  FightLog bad_event = log;
  for (CombatEvent& e : bad_event.events) {
    if (e.damage > 0) {
      e.damage += 1;
      break;
    }
  }
  EXPECT_THROW(replay(bad_event), LogError);
  FightLog bad_seed = log;
  bad_seed.seed += 1;
  EXPECT_THROW(replay(bad_seed), LogError);
}

TEST(EventLog, ReplayObserverSeesEveryDecision) {
  const FightLog log = play_logged(6, CharacterClass::kCleric, CharacterClass::kWizard);
  size_t events = 0;
  int calls = 0;
  replay(log, [&](const GameState&, const std::vector<CombatEvent>& ev) {
    ++calls;
    events += ev.size();
  });
  EXPECT_EQ(events, log.events.size());
  EXPECT_GT(calls, 0);
}

TEST(EventLog, ActionJsonRoundTrip) {
  const std::vector<Action> actions = {
      Action::end_turn(), Action::move(Direction::kDownRight),
      Action::attack(ActionKind::kTwoWeaponAttack, 1, 0),
      Action::cast(SpellId::kGuidingBolt, 1), Action::simple(ActionKind::kDashBonus)};
  for (const Action& a : actions) EXPECT_EQ(action_from_json(action_to_json(a)), a);
  EXPECT_THROW(action_from_json(nlohmann::json{{"kind", "teleport"}}), LogError);
}

}  // namespace
}  // namespace dndrl
