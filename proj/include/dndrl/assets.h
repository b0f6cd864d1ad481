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

// Bundled character sheets and maps under the data directory.

#ifndef DNDRL_ASSETS_H_
#define DNDRL_ASSETS_H_

#include <filesystem>
#include <memory>
#include <string_view>
#include <vector>

#include "dndrl/battlemap.h"
#include "dndrl/character.h"

namespace dndrl {

// $DNDRL_DATA if set, else the source tree's data/ directory.
std::filesystem::path data_dir();

// Gom (fighter), Belly (rogue), Crys (wizard), Shor (cleric). Cached.
std::shared_ptr<const CharacterSheet> bundled_sheet(CharacterClass c);

// Loads data/maps/<name>.txt. Cached.
std::shared_ptr<const BattleMap> bundled_map(std::string_view name);

// The four training and tournament maps: plain, river, wall, ruins.
const std::vector<std::shared_ptr<const BattleMap>>& default_map_pool();

}  // namespace dndrl

#endif  // DNDRL_ASSETS_H_
