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

#include "dndrl/rules.h"

#include <algorithm>

namespace dndrl {

int cover_ac_bonus(Sight cover) { return cover == Sight::kHalfCover ? 2 : 0; }

namespace {

int attack_ability_modifier(const CharacterSheet& sheet, const Weapon& w,
                            AttackMode mode) {
  const int str = sheet.modifier(Ability::kStr);
  const int dex = sheet.modifier(Ability::kDex);
  if (w.has(kFinesse)) return std::max(str, dex);
  if (w.category == WeaponCategory::kRanged) return dex;
  // Thrown non-finesse weapons use STR like their melee use.
  (void)mode;
  return str;
}

}  // namespace

int weapon_attack_bonus(const CharacterSheet& sheet, const Weapon& w,
                        AttackMode mode) {
  return sheet.proficiency_bonus + attack_ability_modifier(sheet, w, mode);
}

int weapon_damage_modifier(const CharacterSheet& sheet, const Weapon& w,
                           AttackMode mode) {
  return attack_ability_modifier(sheet, w, mode);
}

Advantage attack_advantage(const EntityState& attacker,
                           const EntityState& target, AttackMode mode,
                           int normal_range) {
  const int dist = distance_ft(attacker.pos, target.pos);
  bool adv = false;
  bool dis = false;
  if (attacker.conditions.prone) dis = true;
  if (target.conditions.dodging) dis = true;
  if (target.conditions.prone) {
    if (mode == AttackMode::kMelee && dist <= kFeetPerTile) {
      adv = true;
    } else {
      dis = true;
    }
  }
  if (mode == AttackMode::kRanged) {
    if (dist <= kFeetPerTile) dis = true;
    if (dist > normal_range) dis = true;
  }
  return combine_advantage(adv, dis);
}

AttackResult resolve_attack(int to_hit, int target_ac, Sight cover,
                            Advantage advantage, RngStream& rng) {
  AttackResult r;
  r.to_hit = to_hit;
  r.effective_ac = target_ac + cover_ac_bonus(cover);
  r.roll = roll_d20(to_hit, advantage, rng);
  if (r.roll.critical_hit) {
    r.hit = true;
  } else if (r.roll.critical_miss) {
    r.hit = false;
  } else {
    r.hit = r.roll.total >= r.effective_ac;
  }
  return r;
}

AttackResult attack_roll(const EntityState& attacker, const EntityState& target,
                         const Weapon& weapon, AttackMode mode, Sight cover,
                         RngStream& rng) {
  if (cover == Sight::kBlocked) {
    throw IllegalActionError("attack against a target out of sight");
  }
  const int dist = distance_ft(attacker.pos, target.pos);
  int normal = weapon.normal_range;
  if (mode == AttackMode::kMelee) {
    if (!weapon.melee()) throw IllegalActionError("not a melee weapon");
    if (dist > kFeetPerTile) throw IllegalActionError("target out of reach");
  } else {
    if (!weapon.ranged_capable()) throw IllegalActionError("not a ranged weapon");
    if (dist > weapon.long_range) throw IllegalActionError("target out of range");
  }
  const int bonus = weapon_attack_bonus(*attacker.sheet, weapon, mode);
  return resolve_attack(bonus, target.armor_class(), cover,
                        attack_advantage(attacker, target, mode, normal), rng);
}

AttackResult spell_attack_roll(const EntityState& caster,
                               const EntityState& target, const Spell& s,
                               Sight cover, RngStream& rng) {
  if (cover == Sight::kBlocked) {
    throw IllegalActionError("spell attack against a target out of sight");
  }
  if (distance_ft(caster.pos, target.pos) > s.range) {
    throw IllegalActionError("target out of spell range");
  }
  return resolve_attack(caster.sheet->spell_attack_bonus(),
                        target.armor_class(), cover,
                        attack_advantage(caster, target, AttackMode::kRanged,
                                         s.range),
                        rng);
}

SaveResult saving_throw(const EntityState& entity, Ability ability, int dc,
                        RngStream& rng) {
  if (dc < 1) throw std::invalid_argument("saving throw DC must be >= 1");
  SaveResult r;
  r.bonus = entity.sheet->save_bonus(ability);
  const bool adv = ability == Ability::kDex && entity.conditions.dodging;
  r.roll = roll_d20(r.bonus, combine_advantage(adv, false), rng);
  r.passed = r.roll.total >= dc;
  return r;
}

EntityState apply_damage(EntityState target, int amount, DamageType type) {
  (void)type;  // no resistances in this rules subset
  if (amount < 0) throw std::invalid_argument("negative damage");
  target.hp = std::max(0, target.hp - amount);
  if (target.hp == 0) {
    target.conditions.dead = true;
    target.conditions.dodging = false;
    target.conditions.shielded = false;
  }
  return target;
}

EntityState apply_healing(EntityState target, int amount) {
  if (amount < 0) throw std::invalid_argument("negative healing");
  if (target.conditions.dead) return target;
  target.hp = std::min(target.max_hp(), target.hp + amount);
  return target;
}

}  // namespace dndrl
