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

// Attack rolls, saving throws and damage. Pure functions of the entities
// involved and an injected RngStream.

#ifndef DNDRL_RULES_H_
#define DNDRL_RULES_H_

#include <stdexcept>
#include <string>

#include "dndrl/dice.h"
#include "dndrl/game_state.h"

namespace dndrl {

class IllegalActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AttackMode { kMelee, kRanged };

int cover_ac_bonus(Sight cover);

// Proficiency plus STR (melee), DEX (ranged) or the better of the two for
// finesse weapons. Every bundled character is proficient with its kit.
int weapon_attack_bonus(const CharacterSheet& sheet, const Weapon& w,
                        AttackMode mode);
int weapon_damage_modifier(const CharacterSheet& sheet, const Weapon& w,
                           AttackMode mode);

// Net advantage of an attack from the entities' conditions and distance:
// prone attacker, dodging target, ranged attacks at long range or against an
// adjacent target impose disadvantage; a prone target grants advantage to
// adjacent melee and disadvantage to everything else.
Advantage attack_advantage(const EntityState& attacker,
                           const EntityState& target, AttackMode mode,
                           int normal_range);

struct AttackResult {
  D20Outcome roll;
  int to_hit = 0;
  int effective_ac = 0;  // AC plus cover
  bool hit = false;
};

// Hit iff natural 20, or total >= AC + cover and not a natural 1.
AttackResult resolve_attack(int to_hit, int target_ac, Sight cover,
                            Advantage advantage, RngStream& rng);

// Throws IllegalActionError when the target is out of the weapon's range
// band or not visible.
AttackResult attack_roll(const EntityState& attacker, const EntityState& target,
                         const Weapon& weapon, AttackMode mode, Sight cover,
                         RngStream& rng);

AttackResult spell_attack_roll(const EntityState& caster,
                               const EntityState& target, const Spell& s,
                               Sight cover, RngStream& rng);

struct SaveResult {
  D20Outcome roll;
  int bonus = 0;
  bool passed = false;
};

// d20 + modifier (+ proficiency) >= dc. A natural 20 is not an automatic
// success. Dodging grants advantage on DEX saves.
SaveResult saving_throw(const EntityState& entity, Ability ability, int dc,
                        RngStream& rng);

// hp' = max(0, hp - amount); reaching 0 kills outright.
EntityState apply_damage(EntityState target, int amount, DamageType type);
EntityState apply_healing(EntityState target, int amount);

}  // namespace dndrl

#endif  // DNDRL_RULES_H_
