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

// The fixed SRD subset: a handful of weapons, two armors, seven spells and
// the level-2 class features of the four playable classes.

#ifndef DNDRL_CATALOG_H_
#define DNDRL_CATALOG_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dndrl/dice.h"

namespace dndrl {

enum class Ability { kStr, kDex, kCon, kInt, kWis, kCha };
inline constexpr std::array<Ability, 6> kAbilities = {
    Ability::kStr, Ability::kDex, Ability::kCon,
    Ability::kInt, Ability::kWis, Ability::kCha};
std::string_view ability_key(Ability a);  // "str", "dex", ...
std::optional<Ability> parse_ability(std::string_view key);

enum class CharacterClass { kFighter, kRogue, kWizard, kCleric };
inline constexpr std::array<CharacterClass, 4> kClasses = {
    CharacterClass::kFighter, CharacterClass::kRogue, CharacterClass::kWizard,
    CharacterClass::kCleric};
std::string_view class_key(CharacterClass c);  // "fighter", ...
std::optional<CharacterClass> parse_class(std::string_view key);
bool save_proficient(CharacterClass c, Ability a);

enum class DamageType { kPiercing, kSlashing, kBludgeoning, kFire, kRadiant, kForce };
std::string_view damage_type_name(DamageType t);

// ---------------------------------------------------------------------------
// Weapons

enum class WeaponId { kDagger, kRapier, kLongbow, kWarhammer };
inline constexpr int kWeaponCount = 4;

enum class WeaponCategory { kMelee, kRanged };

enum WeaponProperty : unsigned {
  kFinesse = 1u << 0,
  kLight = 1u << 1,
  kThrown = 1u << 2,
  kTwoHanded = 1u << 3,
  kLoading = 1u << 4,
  kVersatile = 1u << 5,
};

struct Weapon {
  WeaponId id;
  std::string_view key;
  std::string_view name;
  WeaponCategory category;
  RollSpec damage;
  DamageType damage_type;
  int normal_range;  // feet; 5 for plain melee weapons
  int long_range;
  unsigned properties;

  bool has(WeaponProperty p) const { return (properties & p) != 0; }
  bool melee() const { return category == WeaponCategory::kMelee; }
  // Can be used for an attack at range (bows and thrown weapons).
  bool ranged_capable() const {
    return category == WeaponCategory::kRanged || has(kThrown);
  }
};

const Weapon& weapon(WeaponId id);

// ---------------------------------------------------------------------------
// Armor and other gear

enum class ArmorId { kLeather, kScaleMail };

struct Armor {
  ArmorId id;
  std::string_view key;
  int base_ac;
  int dex_cap;  // -1: uncapped
};

const Armor& armor(ArmorId id);

enum class ItemKind { kWeapon, kArmor, kShield, kGear };

struct Item {
  ItemKind kind;
  std::string_view key;
  std::optional<WeaponId> weapon;
  std::optional<ArmorId> armor;
};

std::optional<Item> find_item(std::string_view key);

// ---------------------------------------------------------------------------
// Spells

enum class SpellId {
  kFireBolt,
  kMagicMissile,
  kBurningHands,
  kShield,
  kSacredFlame,
  kCureWounds,
  kGuidingBolt,
};
inline constexpr int kSpellCount = 7;

enum class SpellCost { kAction, kReaction };
enum class SpellEffect { kAttack, kSave, kAutoHit, kHeal, kWard };

struct Spell {
  SpellId id;
  std::string_view key;
  std::string_view name;
  int level;  // 0 = cantrip
  SpellCost cost;
  int range;  // feet; 0 = self
  SpellEffect effect;
  RollSpec dice;
  DamageType damage_type;
  Ability save_ability;  // kSave only
  bool half_on_save;
  bool ignores_cover;
};

const Spell& spell(SpellId id);
std::optional<SpellId> find_spell(std::string_view key);

// ---------------------------------------------------------------------------
// Class features

enum class FeatureId {
  kSecondWind,
  kActionSurge,
  kCunningAction,
  kSneakAttack,
  kSpellcasting,
};

enum class FeatureTrigger { kAction, kBonus, kFree, kPassive };

struct ClassFeature {
  FeatureId id;
  std::string_view key;
  int uses_per_rest;  // -1: unlimited
  FeatureTrigger trigger;
};

const ClassFeature& feature(FeatureId id);
const std::vector<FeatureId>& class_features(CharacterClass c);
bool has_feature(CharacterClass c, FeatureId f);

// Level-1 spell slots at character level 2.
int spell_slots_at_level2(CharacterClass c);

// Sneak attack dice at rogue level 2.
inline const RollSpec& sneak_attack_dice() {
  static const RollSpec kDice(1, 6);
  return kDice;
}

}  // namespace dndrl

#endif  // DNDRL_CATALOG_H_
