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

#include "dndrl/character.h"

#include <algorithm>
#include <fstream>
#include <set>

namespace dndrl {

using nlohmann::json;

int CharacterSheet::modifier(Ability a) const {
  return ability_modifier(score(a));
}

int CharacterSheet::save_bonus(Ability a) const {
  return modifier(a) +
         (save_proficient(character_class, a) ? proficiency_bonus : 0);
}

Ability CharacterSheet::spellcasting_ability() const {
  switch (character_class) {
    case CharacterClass::kWizard: return Ability::kInt;
    case CharacterClass::kCleric: return Ability::kWis;
    default: return Ability::kInt;
  }
}

int CharacterSheet::spell_attack_bonus() const {
  return proficiency_bonus + modifier(spellcasting_ability());
}

int CharacterSheet::spell_save_dc() const {
  return 8 + proficiency_bonus + modifier(spellcasting_ability());
}

int derive_ac(const CharacterSheet& sheet) {
  const int dex = sheet.modifier(Ability::kDex);
  int ac = 10 + dex;
  if (sheet.armor) {
    const Armor& a = armor(*sheet.armor);
    ac = a.base_ac + (a.dex_cap < 0 ? dex : std::min(dex, a.dex_cap));
  }
  if (sheet.shield) ac += 2;
  return ac;
}

namespace {

const json& require(const json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end()) throw SheetError(field, "missing");
  return *it;
}

int require_int(const json& doc, const char* field) {
  const json& v = require(doc, field);
  if (!v.is_number_integer()) throw SheetError(field, "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& doc, const char* field) {
  const json& v = require(doc, field);
  if (!v.is_string() || v.get<std::string>().empty()) {
    throw SheetError(field, "expected a non-empty string");
  }
  return v.get<std::string>();
}

}  // namespace

CharacterSheet load_sheet(const json& doc) {
  if (!doc.is_object()) throw SheetError("<root>", "expected an object");
  static const std::set<std::string> kKnown = {
      "name", "race", "class", "level", "max_hp", "speed", "abilities",
      "proficiency_bonus", "equipment", "spells", "armor_class"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKnown.count(key)) throw SheetError(key, "unknown field");
  }

  CharacterSheet s;
  s.name = require_string(doc, "name");
  s.race = require_string(doc, "race");
  const std::string cls = require_string(doc, "class");
  auto parsed = parse_class(cls);
  if (!parsed) throw SheetError("class", "unknown class '" + cls + "'");
  s.character_class = *parsed;

  s.level = require_int(doc, "level");
  if (s.level != 2) throw SheetError("level", "only level 2 is supported");
  s.max_hp = require_int(doc, "max_hp");
  if (s.max_hp < 1) throw SheetError("max_hp", "must be positive");
  s.speed = require_int(doc, "speed");
  if (s.speed <= 0 || s.speed % 5 != 0) {
    throw SheetError("speed", "must be a positive multiple of 5");
  }
  s.proficiency_bonus = require_int(doc, "proficiency_bonus");
  if (s.proficiency_bonus != 2) {
    throw SheetError("proficiency_bonus", "must be 2 at level 2");
  }

  const json& abilities = require(doc, "abilities");
  if (!abilities.is_object()) throw SheetError("abilities", "expected an object");
  for (const auto& [key, value] : abilities.items()) {
    if (!parse_ability(key)) throw SheetError("abilities." + key, "unknown ability");
  }
  for (Ability a : kAbilities) {
    const std::string field = "abilities." + std::string(ability_key(a));
    auto it = abilities.find(std::string(ability_key(a)));
    if (it == abilities.end()) throw SheetError(field, "missing");
    if (!it->is_number_integer()) throw SheetError(field, "expected an integer");
    const int v = it->get<int>();
    if (v < 1 || v > 30) throw SheetError(field, "score outside 1..30");
    s.abilities[static_cast<int>(a)] = v;
  }

  const json& equipment = require(doc, "equipment");
  if (!equipment.is_array()) throw SheetError("equipment", "expected an array");
  for (const json& e : equipment) {
    if (!e.is_string()) throw SheetError("equipment", "expected item ids");
    const std::string key = e.get<std::string>();
    auto item = find_item(key);
    if (!item) throw SheetError("equipment", "unknown item '" + key + "'");
    s.equipment.push_back(key);
    switch (item->kind) {
      case ItemKind::kWeapon:
        s.weapons.push_back(*item->weapon);
        break;
      case ItemKind::kArmor:
        if (s.armor) throw SheetError("equipment", "more than one armor");
        s.armor = item->armor;
        break;
      case ItemKind::kShield:
        if (s.shield) throw SheetError("equipment", "more than one shield");
        s.shield = true;
        break;
      case ItemKind::kGear:
        break;
    }
  }

  if (auto it = doc.find("spells"); it != doc.end()) {
    if (!it->is_array()) throw SheetError("spells", "expected an array");
    const bool caster = s.has(FeatureId::kSpellcasting);
    for (const json& e : *it) {
      if (!e.is_string()) throw SheetError("spells", "expected spell ids");
      const std::string key = e.get<std::string>();
      auto id = find_spell(key);
      if (!id) throw SheetError("spells", "unknown spell '" + key + "'");
      if (!caster) throw SheetError("spells", "class cannot cast spells");
      s.spells.push_back(*id);
    }
  }

  s.armor_class = require_int(doc, "armor_class");
  const int derived = derive_ac(s);
  if (derived != s.armor_class) {
    throw SheetError("armor_class", "stored " + std::to_string(s.armor_class) +
                                        " but equipment gives " +
                                        std::to_string(derived));
  }
  return s;
}

CharacterSheet load_sheet_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SheetError("<file>", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SheetError("<file>", std::string("malformed JSON: ") + e.what());
  }
  return load_sheet(doc);
}

json sheet_to_json(const CharacterSheet& s) {
  json abilities = json::object();
  for (Ability a : kAbilities) {
    abilities[std::string(ability_key(a))] = s.score(a);
  }
  json spells = json::array();
  for (SpellId id : s.spells) spells.push_back(std::string(spell(id).key));
  return json{{"name", s.name},
              {"race", s.race},
              {"class", std::string(class_key(s.character_class))},
              {"level", s.level},
              {"max_hp", s.max_hp},
              {"speed", s.speed},
              {"abilities", abilities},
              {"proficiency_bonus", s.proficiency_bonus},
              {"equipment", s.equipment},
              {"spells", spells},
              {"armor_class", s.armor_class}};
}

}  // namespace dndrl
