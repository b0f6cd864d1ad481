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

#ifndef DNDRL_GAME_STATE_H_
#define DNDRL_GAME_STATE_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dndrl/battlemap.h"
#include "dndrl/character.h"
#include "dndrl/rng.h"

namespace dndrl {

enum class Team { kHero = 0, kEnemy = 1 };

struct Conditions {
  bool prone = false;
  bool dodging = false;   // until the start of the entity's next turn
  bool dead = false;
  bool shielded = false;  // shield spell, +5 AC until its next turn
  friend bool operator==(const Conditions&, const Conditions&) = default;
};

// Per-turn budget, reset when the entity's turn starts.
struct Economy {
  int actions = 1;
  int bonus_actions = 1;
  int reactions = 1;
  int movement_left = 0;
  bool disengaged = false;
  bool action_surged = false;
  bool attack_hit = false;         // an attack of ours landed this turn
  bool sneak_attack_used = false;
  int light_melee_slot = -1;       // weapon slot of a light melee attack this turn
  friend bool operator==(const Economy&, const Economy&) = default;
};

struct EntityState {
  int id = 0;
  Team team = Team::kHero;
  std::shared_ptr<const CharacterSheet> sheet;
  int hp = 0;
  Position pos;
  Conditions conditions;
  Economy economy;
  int second_wind_uses = 0;
  int action_surge_uses = 0;
  int spell_slots = 0;

  bool alive() const { return !conditions.dead; }
  int max_hp() const { return sheet->max_hp; }
  int speed() const { return sheet->speed; }
  CharacterClass character_class() const { return sheet->character_class; }
  int armor_class() const {
    return sheet->armor_class + (conditions.shielded ? 5 : 0);
  }
  bool knows(SpellId s) const;
};

enum class ActionKind {
  kEndTurn,
  kMeleeAttack,
  kRangedAttack,
  kCastSpell,
  kMove,
  kDash,
  kDashBonus,
  kDisengage,
  kDisengageBonus,
  kDodge,
  kProne,
  kStand,
  kSecondWind,
  kActionSurge,
  kTwoWeaponAttack,
};
inline constexpr int kActionKindCount = 15;
const char* action_kind_name(ActionKind k);
std::optional<ActionKind> parse_action_kind(std::string_view name);

struct Action {
  ActionKind kind = ActionKind::kEndTurn;
  int weapon_slot = -1;  // index into CharacterSheet::weapons
  std::optional<SpellId> spell;
  int target = -1;       // entity id
  std::optional<Direction> direction;

  static Action end_turn() { return {}; }
  static Action simple(ActionKind k) {
    Action a;
    a.kind = k;
    return a;
  }
  static Action move(Direction d) {
    Action a;
    a.kind = ActionKind::kMove;
    a.direction = d;
    return a;
  }
  static Action attack(ActionKind k, int slot, int target) {
    Action a;
    a.kind = k;
    a.weapon_slot = slot;
    a.target = target;
    return a;
  }
  static Action cast(SpellId s, int target) {
    Action a;
    a.kind = ActionKind::kCastSpell;
    a.spell = s;
    a.target = target;
    return a;
  }

  // Spends the action slot (attack, spell, dash/disengage/dodge as actions,
  // and going prone count here as "major" decisions).
  bool is_major() const;

  friend bool operator==(const Action&, const Action&) = default;
};

struct RollRecord {
  std::string label;
  std::vector<int> dice;
  int modifier = 0;
  int total = 0;
  friend bool operator==(const RollRecord&, const RollRecord&) = default;
};

struct EntitySnapshot {
  int id = 0;
  int hp = 0;
  Position pos;
  friend bool operator==(const EntitySnapshot&, const EntitySnapshot&) = default;
};

struct CombatEvent {
  int round = 0;
  int turn = 0;
  int actor = 0;
  Action action;
  bool reaction = false;  // triggered by another entity's action
  std::string text;
  std::vector<RollRecord> rolls;
  int target = -1;
  bool hit = false;
  bool critical = false;
  int damage = 0;
  int healing = 0;
  std::string note;
  std::vector<EntitySnapshot> after;
  friend bool operator==(const CombatEvent&, const CombatEvent&) = default;
};

struct GameState {
  std::shared_ptr<const BattleMap> map;
  std::vector<EntityState> entities;  // indexed by id
  std::vector<int> initiative;        // living entity ids, acting order
  int active_index = 0;
  int round = 1;
  int turn = 0;  // global count of completed turns
  int max_rounds = 500;
  RngStream rng;

  int active_id() const { return initiative.at(active_index); }
  const EntityState& active() const { return entities.at(active_id()); }
  EntityState& active() { return entities.at(active_id()); }
  const EntityState& entity(int id) const { return entities.at(id); }
  EntityState& entity(int id) { return entities.at(id); }
  // Living entities on the other team, in id order.
  std::vector<int> enemies_of(int id) const;
  bool occupied(Position p) const;
};

}  // namespace dndrl

#endif  // DNDRL_GAME_STATE_H_
