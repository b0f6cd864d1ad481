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

#include "dndrl/catalog.h"

#include <algorithm>

namespace dndrl {

std::string_view ability_key(Ability a) {
  switch (a) {
    case Ability::kStr: return "str";
    case Ability::kDex: return "dex";
    case Ability::kCon: return "con";
    case Ability::kInt: return "int";
    case Ability::kWis: return "wis";
    case Ability::kCha: return "cha";
  }
  return "str";
}

std::optional<Ability> parse_ability(std::string_view key) {
  for (Ability a : kAbilities) {
    if (ability_key(a) == key) return a;
  }
  return std::nullopt;
}

std::string_view class_key(CharacterClass c) {
  switch (c) {
    case CharacterClass::kFighter: return "fighter";
    case CharacterClass::kRogue: return "rogue";
    case CharacterClass::kWizard: return "wizard";
    case CharacterClass::kCleric: return "cleric";
  }
  return "fighter";
}

std::optional<CharacterClass> parse_class(std::string_view key) {
  for (CharacterClass c : kClasses) {
    if (class_key(c) == key) return c;
  }
  return std::nullopt;
}

bool save_proficient(CharacterClass c, Ability a) {
  switch (c) {
    case CharacterClass::kFighter:
      return a == Ability::kStr || a == Ability::kCon;
    case CharacterClass::kRogue:
      return a == Ability::kDex || a == Ability::kInt;
    case CharacterClass::kWizard:
      return a == Ability::kInt || a == Ability::kWis;
    case CharacterClass::kCleric:
      return a == Ability::kWis || a == Ability::kCha;
  }
  return false;
}

std::string_view damage_type_name(DamageType t) {
  switch (t) {
    case DamageType::kPiercing: return "piercing";
    case DamageType::kSlashing: return "slashing";
    case DamageType::kBludgeoning: return "bludgeoning";
    case DamageType::kFire: return "fire";
    case DamageType::kRadiant: return "radiant";
    case DamageType::kForce: return "force";
  }
  return "piercing";
}

const Weapon& weapon(WeaponId id) {
  static const std::array<Weapon, kWeaponCount> kWeapons = {{
      {WeaponId::kDagger, "dagger", "dagger", WeaponCategory::kMelee,
       RollSpec(1, 4), DamageType::kPiercing, 20, 60,
       kFinesse | kLight | kThrown},
      {WeaponId::kRapier, "rapier", "rapier", WeaponCategory::kMelee,
       RollSpec(1, 8), DamageType::kPiercing, 5, 5, kFinesse},
      {WeaponId::kLongbow, "longbow", "longbow", WeaponCategory::kRanged,
       RollSpec(1, 8), DamageType::kPiercing, 150, 600, kTwoHanded},
      // One-handed damage; every sheet that carries it also carries a shield.
      {WeaponId::kWarhammer, "warhammer", "warhammer", WeaponCategory::kMelee,
       RollSpec(1, 8), DamageType::kBludgeoning, 5, 5, kVersatile},
  }};
  return kWeapons[static_cast<int>(id)];
}

const Armor& armor(ArmorId id) {
  static const std::array<Armor, 2> kArmors = {{
      {ArmorId::kLeather, "leather_armor", 11, -1},
      {ArmorId::kScaleMail, "scale_mail", 14, 2},
  }};
  return kArmors[static_cast<int>(id)];
}

std::optional<Item> find_item(std::string_view key) {
  for (int i = 0; i < kWeaponCount; ++i) {
    const Weapon& w = weapon(static_cast<WeaponId>(i));
    if (w.key == key) return Item{ItemKind::kWeapon, w.key, w.id, std::nullopt};
  }
  for (ArmorId id : {ArmorId::kLeather, ArmorId::kScaleMail}) {
    if (armor(id).key == key) {
      return Item{ItemKind::kArmor, armor(id).key, std::nullopt, id};
    }
  }
  if (key == "shield") return Item{ItemKind::kShield, "shield", {}, {}};
  if (key == "torch") return Item{ItemKind::kGear, "torch", {}, {}};
  return std::nullopt;
}

const Spell& spell(SpellId id) {
  // kWard spells carry a placeholder die that is never rolled.
  static const std::array<Spell, kSpellCount> kSpells = {{
      {SpellId::kFireBolt, "fire_bolt", "fire bolt", 0, SpellCost::kAction,
       120, SpellEffect::kAttack, RollSpec(1, 10), DamageType::kFire,
       Ability::kDex, false, false},
      {SpellId::kMagicMissile, "magic_missile", "magic missile", 1,
       SpellCost::kAction, 120, SpellEffect::kAutoHit, RollSpec(3, 4, 3),
       DamageType::kForce, Ability::kDex, false, true},
      {SpellId::kBurningHands, "burning_hands", "burning hands", 1,
       SpellCost::kAction, 15, SpellEffect::kSave, RollSpec(3, 6),
       DamageType::kFire, Ability::kDex, true, false},
      {SpellId::kShield, "shield", "shield", 1, SpellCost::kReaction, 0,
       SpellEffect::kWard, RollSpec(1, 4), DamageType::kForce, Ability::kDex,
       false, true},
      {SpellId::kSacredFlame, "sacred_flame", "sacred flame", 0,
       SpellCost::kAction, 60, SpellEffect::kSave, RollSpec(1, 8),
       DamageType::kRadiant, Ability::kDex, false, true},
      {SpellId::kCureWounds, "cure_wounds", "cure wounds", 1,
       SpellCost::kAction, 5, SpellEffect::kHeal, RollSpec(1, 8),
       DamageType::kRadiant, Ability::kDex, false, true},
      {SpellId::kGuidingBolt, "guiding_bolt", "guiding bolt", 1,
       SpellCost::kAction, 120, SpellEffect::kAttack, RollSpec(4, 6),
       DamageType::kRadiant, Ability::kDex, false, false},
  }};
  return kSpells[static_cast<int>(id)];
}

std::optional<SpellId> find_spell(std::string_view key) {
  for (int i = 0; i < kSpellCount; ++i) {
    if (spell(static_cast<SpellId>(i)).key == key) return static_cast<SpellId>(i);
  }
  return std::nullopt;
}

const ClassFeature& feature(FeatureId id) {
  static const std::array<ClassFeature, 5> kFeatures = {{
      {FeatureId::kSecondWind, "second_wind", 1, FeatureTrigger::kBonus},
      {FeatureId::kActionSurge, "action_surge", 1, FeatureTrigger::kFree},
      {FeatureId::kCunningAction, "cunning_action", -1, FeatureTrigger::kBonus},
      {FeatureId::kSneakAttack, "sneak_attack", -1, FeatureTrigger::kPassive},
      {FeatureId::kSpellcasting, "spellcasting", -1, FeatureTrigger::kAction},
  }};
  return kFeatures[static_cast<int>(id)];
}

const std::vector<FeatureId>& class_features(CharacterClass c) {
  static const std::vector<FeatureId> kFighter = {FeatureId::kSecondWind,
                                                  FeatureId::kActionSurge};
  static const std::vector<FeatureId> kRogue = {FeatureId::kCunningAction,
                                                FeatureId::kSneakAttack};
  static const std::vector<FeatureId> kCaster = {FeatureId::kSpellcasting};
  switch (c) {
    case CharacterClass::kFighter: return kFighter;
    case CharacterClass::kRogue: return kRogue;
    case CharacterClass::kWizard:
    case CharacterClass::kCleric: return kCaster;
  }
  return kCaster;
}

bool has_feature(CharacterClass c, FeatureId f) {
  const auto& fs = class_features(c);
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

int spell_slots_at_level2(CharacterClass c) {
  return (c == CharacterClass::kWizard || c == CharacterClass::kCleric) ? 3 : 0;
}

}  // namespace dndrl
