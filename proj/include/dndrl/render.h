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

#ifndef DNDRL_RENDER_H_
#define DNDRL_RENDER_H_

#include <string>

#include "dndrl/game_state.h"

namespace dndrl {

// Map as seen by `viewer`, one text row per map row, each ending in '\n'.
// '.' floor, 'P' viewer, 'E' enemy, 'A' ally, '_' out of map, '*' wall,
// 'o' barrel, '~' water, ' ' for tiles the viewer cannot see. Hidden
// creatures are not drawn.
std::string render_ascii(const GameState& state, int viewer);

// Percentage printed like a one-element numpy float array: "[83.33333333]",
// "[100.]", "[12.5]".
std::string format_health_percent(int hp, int max_hp);

}  // namespace dndrl

#endif  // DNDRL_RENDER_H_
