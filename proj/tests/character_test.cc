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

#include <cmath>

#include <gtest/gtest.h>

#include "dndrl/assets.h"
#include "dndrl/character.h"
#include "test_util.h"

namespace dndrl {
namespace {

using nlohmann::json;

json gom_json() {
  return json::parse(R"({
    "name": "Gom", "race": "High Elf", "class": "fighter", "level": 2,
    "max_hp": 24, "speed": 30,
    "abilities": {"str": 12, "dex": 20, "con": 16, "int": 16, "wis": 12, "cha": 11},
    "proficiency_bonus": 2,
    "equipment": ["rapier", "longbow", "leather_armor", "shield"],
    "spells": [], "armor_class": 18})");
}

TEST(Sheets, BundledGom) {
  const auto gom = bundled_sheet(CharacterClass::kFighter);
  EXPECT_EQ(gom->name, "Gom");
  EXPECT_EQ(gom->character_class, CharacterClass::kFighter);
  EXPECT_EQ(gom->level, 2);
  EXPECT_EQ(gom->max_hp, 24);
  EXPECT_EQ(gom->score(Ability::kDex), 20);
  EXPECT_EQ(gom->equipment,
            (std::vector<std::string>{"rapier", "longbow", "leather_armor", "shield"}));
  EXPECT_EQ(gom->weapons, (std::vector<WeaponId>{WeaponId::kRapier, WeaponId::kLongbow}));
  EXPECT_TRUE(gom->shield);
}

TEST(Sheets, BundledCrys) {
  const auto crys = bundled_sheet(CharacterClass::kWizard);
  EXPECT_EQ(crys->name, "Crys");
  EXPECT_EQ(crys->character_class, CharacterClass::kWizard);
  EXPECT_EQ(crys->max_hp, 14);
  EXPECT_EQ(crys->score(Ability::kInt), 18);
  EXPECT_EQ(crys->equipment, std::vector<std::string>{"dagger"});
  EXPECT_EQ(crys->spells.size(), 4u);
}

TEST(Sheets, BellyLoadedAsPrinted) {
  const auto belly = bundled_sheet(CharacterClass::kRogue);
  EXPECT_EQ(belly->max_hp, 18);
  EXPECT_EQ(belly->speed, 25);
  EXPECT_EQ(belly->weapons, (std::vector<WeaponId>{WeaponId::kDagger, WeaponId::kDagger}));
}

TEST(Sheets, RejectsOtherLevels) {
  json j = gom_json();
  j["level"] = 3;
  try {
    load_sheet(j);
    FAIL() << "level 3 accepted";
  } catch (const SheetError& e) {
    EXPECT_EQ(e.field(), "level");
  }
}

TEST(Sheets, ErrorsNameTheField) {
  json j = gom_json();
  j["abilities"]["dex"] = 40;
  EXPECT_THROW(load_sheet(j), SheetError);
  j = gom_json();
  j["equipment"].push_back("bazooka");
  try {
    load_sheet(j);
    FAIL();
  } catch (const SheetError& e) {
    EXPECT_EQ(e.field(), "equipment");
  }
  j = gom_json();
  j["mood"] = "grim";
  EXPECT_THROW(load_sheet(j), SheetError);
  j = gom_json();
  j.erase("max_hp");
  EXPECT_THROW(load_sheet(j), SheetError);
  j = gom_json();
  j["spells"] = {"fire_bolt"};
  EXPECT_THROW(load_sheet(j), SheetError);  // fighters cast nothing
}

TEST(Sheets, JsonRoundTrip) {
  for (CharacterClass c : kClasses) {
    const auto s = bundled_sheet(c);
    const CharacterSheet back = load_sheet(sheet_to_json(*s));
    EXPECT_EQ(back.name, s->name);
    EXPECT_EQ(back.abilities, s->abilities);
    EXPECT_EQ(back.weapons, s->weapons);
    EXPECT_EQ(back.spells, s->spells);
    EXPECT_EQ(back.armor_class, s->armor_class);
  }
}

// SRD armor table: leather 11 + DEX, scale mail 14 + DEX (max 2), shield +2.
int armor_oracle(const CharacterSheet& s) {
  const int dex = static_cast<int>(std::floor((s.score(Ability::kDex) - 10) / 2.0));
  int ac = 10 + dex;
  if (s.armor == ArmorId::kLeather) ac = 11 + dex;
  if (s.armor == ArmorId::kScaleMail) ac = 14 + std::min(dex, 2);
  return ac + (s.shield ? 2 : 0);
}

TEST(ArmorClass, GomAndShor) {
  const auto gom = bundled_sheet(CharacterClass::kFighter);
  EXPECT_EQ(derive_ac(*gom), 11 + 5 + 2);
  const auto shor = bundled_sheet(CharacterClass::kCleric);
  EXPECT_EQ(derive_ac(*shor), 14 + 0 + 2);
  for (CharacterClass c : kClasses) {
    const auto s = bundled_sheet(c);
    EXPECT_EQ(derive_ac(*s), armor_oracle(*s)) << s->name;
    EXPECT_EQ(s->armor_class, derive_ac(*s)) << s->name;
  }
}

TEST(ArmorClass, Unarmored) {
  json j = gom_json();
  j["abilities"]["dex"] = 10;
  j["equipment"] = {"rapier"};
  j["armor_class"] = 10;
  const CharacterSheet s = load_sheet(j);
  EXPECT_EQ(derive_ac(s), 10);
}

TEST(ArmorClass, StoredValueMustMatch) {
  json j = gom_json();
  j["armor_class"] = 17;
  EXPECT_THROW(load_sheet(j), SheetError);
}

TEST(Features, SecondWindGating) {
  GameState s = testing::make_fight(
      "E.......\n........\n........\n........\n........\n........\n........\n.......P\n",
      CharacterClass::kFighter, CharacterClass::kWizard);
  EXPECT_TRUE(feature_available(s, 0, FeatureId::kSecondWind));
  s.entity(0).second_wind_uses = 0;
  EXPECT_FALSE(feature_available(s, 0, FeatureId::kSecondWind));
  s.entity(0).second_wind_uses = 1;
  s.entity(0).economy.bonus_actions = 0;
  EXPECT_FALSE(feature_available(s, 0, FeatureId::kSecondWind));
  EXPECT_FALSE(feature_available(s, 1, FeatureId::kActionSurge));
  EXPECT_FALSE(has_feature(CharacterClass::kWizard, FeatureId::kActionSurge));
}

TEST(Features, SpellSlotsAtLevelTwo) {
  EXPECT_EQ(spell_slots_at_level2(CharacterClass::kWizard), 3);
  EXPECT_EQ(spell_slots_at_level2(CharacterClass::kCleric), 3);
  EXPECT_EQ(spell_slots_at_level2(CharacterClass::kFighter), 0);
}

}  // namespace
}  // namespace dndrl
