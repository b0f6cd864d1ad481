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

// Network-facing views of a GameState: a 7x7 tile tensor around the acting
// entity, a short scalar feature vector, and one categorical encoding per
// legal action.

#ifndef DNDRL_OBSERVATION_H_
#define DNDRL_OBSERVATION_H_

#include <array>
#include <optional>
#include <vector>

#include "dndrl/engine.h"

namespace dndrl {

inline constexpr int kChannels = 16;
inline constexpr int kView = 7;
inline constexpr int kViewCells = kView * kView;
inline constexpr int kTileFeatures = kChannels * kViewCells;
inline constexpr int kScalarFeatures = 13;

// Channel order of the tile tensor.
enum Channel {
  kChPassable,
  kChWall,
  kChOutOfMap,
  kChBarrel,
  kChWater,
  kChSelf,
  kChEnemy,       // masked by line of sight
  kChAlly,
  kChInSight,
  kChEnemyHp,     // hp fraction on the (visible) enemy's cell
  kChEnemyProne,
  kChEnemyDodging,
  kChReachable,   // reachable with the movement left this turn
  kChThreatened,  // within 5 ft of a visible enemy with a melee weapon
  kChCover,       // 0.5 half cover, 1 fully hidden, from the nearest visible enemy
  kChDistance,    // tiles to nearest visible enemy / 8, clipped; 1 if none
};

// Vocabulary sizes of the categorical action fields.
inline constexpr int kActionTypeVocab = 20;
inline constexpr int kBinaryVocab = 2;
inline constexpr int kSubtypeVocab = 16;
inline constexpr int kWeaponVocab = 8;
inline constexpr int kEntityVocab = 8;
inline constexpr int kTerrainVocab = 8;

// action_type: 0 end turn, 1 melee, 2 ranged, 3 spell, 4 dash, 5 disengage,
//   6 dodge, 7 prone, 8 stand, 9 second wind, 10 action surge, 11 off-hand
//   attack, 12..19 move in kDirections order.
// binary_action: 1 for the bonus-action variants of dash and disengage.
// binary_subtype: spell id + 1 for spells; for attacks 1 + the number of
//   earlier slots holding the same weapon; else 0.
// weapon_type: weapon id + 1, or 0.
// entity_type: 0 none, 1 self, 2 + class of the target otherwise.
// terrain_type: terrain of the target or destination tile: 1 floor, 2 water,
//   6 target in half cover; 0 when there is none.
// direction: 1 + direction for moves, else 0.
struct ActionEncoding {
  int action_type = 0;
  int binary_action = 0;
  int binary_subtype = 0;
  int weapon_type = 0;
  int entity_type = 0;
  int terrain_type = 0;
  int direction = 0;
  friend bool operator==(const ActionEncoding&, const ActionEncoding&) = default;
};

struct Observation {
  std::array<double, kTileFeatures> tiles{};  // [channel][row][col]
  std::array<double, kScalarFeatures> scalars{};
  int own_class = 0;
  int enemy_class = 0;
  std::vector<ActionEncoding> legal;

  double tile(int channel, int row, int col) const {
    return tiles[channel * kViewCells + row * kView + col];
  }
};

ActionEncoding encode_action(const GameState& state, const Action& action);

// Index of `enc` in `legal`, or nullopt. Encodings of one menu are distinct.
std::optional<int> decode_action(const std::vector<ActionEncoding>& legal,
                                 const ActionEncoding& enc);

// Observation for `pov`; legal actions are filled only when `pov` is the
// active entity.
Observation encode_observation(const GameState& state, int pov);

}  // namespace dndrl

#endif  // DNDRL_OBSERVATION_H_
