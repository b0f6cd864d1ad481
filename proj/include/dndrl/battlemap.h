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

#ifndef DNDRL_BATTLEMAP_H_
#define DNDRL_BATTLEMAP_H_

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dndrl {

inline constexpr int kFeetPerTile = 5;

enum class Terrain : unsigned char {
  kFloor,
  kOutOfMap,
  kWall,
  kBarrel,
  kWater,
};

struct Position {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// Chebyshev distance in tiles; diagonal steps count as one tile.
inline int tile_distance(Position a, Position b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}
inline int distance_ft(Position a, Position b) {
  return tile_distance(a, b) * kFeetPerTile;
}

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BattleMap {
 public:
  BattleMap(std::string name, int width, int height, std::vector<Terrain> tiles,
            Position hero_spawn, Position enemy_spawn);

  const std::string& name() const { return name_; }
  int width() const { return width_; }
  int height() const { return height_; }
  Position hero_spawn() const { return hero_spawn_; }
  Position enemy_spawn() const { return enemy_spawn_; }

  bool in_bounds(Position p) const {
    return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_;
  }
  // Out-of-bounds positions read as kOutOfMap.
  Terrain at(Position p) const {
    return in_bounds(p) ? tiles_[p.y * width_ + p.x] : Terrain::kOutOfMap;
  }
  bool passable(Position p) const {
    const Terrain t = at(p);
    return t == Terrain::kFloor || t == Terrain::kWater;
  }
  bool blocks_sight(Position p) const { return at(p) == Terrain::kWall; }

  // File glyph rows, spawns included; load_map(to_text()) is identity.
  std::string to_text() const;

 private:
  std::string name_;
  int width_;
  int height_;
  std::vector<Terrain> tiles_;
  Position hero_spawn_;
  Position enemy_spawn_;
};

// Glyphs: '.' floor, '#' wall, 'o' barrel, 'w' water, '_' out of map,
// 'P' hero spawn and 'E' enemy spawn (both on floor).
BattleMap load_map(std::string_view text, std::string name = "");
BattleMap load_map_file(const std::filesystem::path& path);

enum class Sight { kClear, kHalfCover, kBlocked };
const char* sight_name(Sight s);

// Bresenham line between tile centres. Walls block; when the line passes
// exactly between two tiles it is blocked only if both are walls. A barrel on
// the line and adjacent to `to` gives `to` half cover against `from`.
Sight line_of_sight(const BattleMap& map, Position from, Position to);

enum class Direction {
  kUpLeft,
  kLeft,
  kDownLeft,
  kUp,
  kDown,
  kUpRight,
  kRight,
  kDownRight,
};
inline constexpr Direction kDirections[] = {
    Direction::kUpLeft, Direction::kLeft,    Direction::kDownLeft,
    Direction::kUp,     Direction::kDown,    Direction::kUpRight,
    Direction::kRight,  Direction::kDownRight};

Position step(Position p, Direction d);

// Feet of movement to enter `to` from the adjacent tile `from`: 5, or 10 for
// water. Throws MapError when `to` is impassable, not adjacent, or a diagonal
// squeezes between two impassable tiles.
int movement_budget_cost(const BattleMap& map, Position from, Position to);
// Non-throwing variant; returns -1 where the step is illegal.
int try_movement_cost(const BattleMap& map, Position from, Position to);

// Tiles reachable from `from` spending at most `budget_ft`, never entering an
// occupied tile. Includes `from`. Sorted by (x, y).
std::vector<Position> reachable(const BattleMap& map, Position from,
                                int budget_ft,
                                std::span<const Position> occupied = {});

// Terrain only, file glyph '#' rendered as '*'.
std::string render_terrain(const BattleMap& map);

}  // namespace dndrl

#endif  // DNDRL_BATTLEMAP_H_
