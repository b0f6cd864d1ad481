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

#ifndef DNDRL_CHARACTER_H_
#define DNDRL_CHARACTER_H_

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dndrl/catalog.h"
#include "json.hpp"

namespace dndrl {

class SheetError : public std::runtime_error {
 public:
  SheetError(const std::string& field, const std::string& what)
      : std::runtime_error("character sheet field '" + field + "': " + what),
        field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct CharacterSheet {
  std::string name;
  std::string race;
  CharacterClass character_class = CharacterClass::kFighter;
  int level = 2;
  int max_hp = 1;
  int speed = 30;
  std::array<int, 6> abilities{10, 10, 10, 10, 10, 10};
  int proficiency_bonus = 2;
  std::vector<std::string> equipment;  // as written in the file
  std::vector<SpellId> spells;
  int armor_class = 10;

  // Resolved from `equipment`; weapons keep file order and duplicates.
  std::vector<WeaponId> weapons;
  std::optional<ArmorId> armor;
  bool shield = false;

  int score(Ability a) const { return abilities[static_cast<int>(a)]; }
  int modifier(Ability a) const;
  int save_bonus(Ability a) const;
  Ability spellcasting_ability() const;
  int spell_attack_bonus() const;
  int spell_save_dc() const;
  bool has(FeatureId f) const { return has_feature(character_class, f); }
};

// AC from equipment: armor base (+ DEX, capped for medium armor) or 10 + DEX
// unarmored, +2 with a shield.
int derive_ac(const CharacterSheet& sheet);

// Parses and validates a sheet document. Throws SheetError naming the field.
CharacterSheet load_sheet(const nlohmann::json& document);
CharacterSheet load_sheet_file(const std::filesystem::path& path);
nlohmann::json sheet_to_json(const CharacterSheet& sheet);

}  // namespace dndrl

#endif  // DNDRL_CHARACTER_H_
