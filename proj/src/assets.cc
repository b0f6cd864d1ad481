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

#include "dndrl/assets.h"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

namespace dndrl {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const char* sheet_file(CharacterClass c) {
  switch (c) {
    case CharacterClass::kFighter: return "gom.json";
    case CharacterClass::kRogue: return "belly.json";
    case CharacterClass::kWizard: return "crys.json";
    case CharacterClass::kCleric: return "shor.json";
  }
  return "gom.json";
}

}  // namespace

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("DNDRL_DATA"); env && *env) return env;
  return DNDRL_DATA_DIR;
}

std::shared_ptr<const CharacterSheet> bundled_sheet(CharacterClass c) {
  static std::map<CharacterClass, std::shared_ptr<const CharacterSheet>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(c);
  if (it != cache.end()) return it->second;
  auto sheet = std::make_shared<const CharacterSheet>(
      load_sheet_file(data_dir() / "characters" / sheet_file(c)));
  cache.emplace(c, sheet);
  return sheet;
}

std::shared_ptr<const BattleMap> bundled_map(std::string_view name) {
  static std::map<std::string, std::shared_ptr<const BattleMap>, std::less<>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto map = std::make_shared<const BattleMap>(
      load_map_file(data_dir() / "maps" / (std::string(name) + ".txt")));
  cache.emplace(std::string(name), map);
  return map;
}

const std::vector<std::shared_ptr<const BattleMap>>& default_map_pool() {
  static const std::vector<std::shared_ptr<const BattleMap>> pool = {
      bundled_map("plain"), bundled_map("river"), bundled_map("wall"),
      bundled_map("ruins")};
  return pool;
}

}  // namespace dndrl
