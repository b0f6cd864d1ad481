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

#include "dndrl/battlemap.h"

#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <sstream>
#include <tuple>

namespace dndrl {

BattleMap::BattleMap(std::string name, int width, int height,
                     std::vector<Terrain> tiles, Position hero_spawn,
                     Position enemy_spawn)
    : name_(std::move(name)),
      width_(width),
      height_(height),
      tiles_(std::move(tiles)),
      hero_spawn_(hero_spawn),
      enemy_spawn_(enemy_spawn) {
  if (width_ < 6 || height_ < 6) throw MapError("map must be at least 6x6");
  if (static_cast<int>(tiles_.size()) != width_ * height_) {
    throw MapError("tile count does not match dimensions");
  }
  if (!passable(hero_spawn_) || !passable(enemy_spawn_)) {
    throw MapError("spawn on impassable tile");
  }
  if (hero_spawn_ == enemy_spawn_) throw MapError("spawns coincide");
}

namespace {

char file_glyph(Terrain t) {
  switch (t) {
    case Terrain::kFloor: return '.';
    case Terrain::kOutOfMap: return '_';
    case Terrain::kWall: return '#';
    case Terrain::kBarrel: return 'o';
    case Terrain::kWater: return 'w';
  }
  return '.';
}

std::optional<Terrain> parse_glyph(char c) {
  switch (c) {
    case '.': case 'P': case 'E': return Terrain::kFloor;
    case '_': return Terrain::kOutOfMap;
    case '#': return Terrain::kWall;
    case 'o': return Terrain::kBarrel;
    case 'w': return Terrain::kWater;
    default: return std::nullopt;
  }
}

}  // namespace

std::string BattleMap::to_text() const {
  std::string out;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      const Position p{x, y};
      if (p == hero_spawn_) {
        out += 'P';
      } else if (p == enemy_spawn_) {
        out += 'E';
      } else {
        out += file_glyph(at(p));
      }
    }
    out += '\n';
  }
  return out;
}

BattleMap load_map(std::string_view text, std::string name) {
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(line);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw MapError("empty map");

  const int width = static_cast<int>(rows.front().size());
  const int height = static_cast<int>(rows.size());
  std::vector<Terrain> tiles;
  tiles.reserve(width * height);
  std::optional<Position> hero, enemy;
  for (int y = 0; y < height; ++y) {
    if (static_cast<int>(rows[y].size()) != width) {
      throw MapError("ragged row " + std::to_string(y + 1) + ": expected " +
                     std::to_string(width) + " glyphs, got " +
                     std::to_string(rows[y].size()));
    }
    for (int x = 0; x < width; ++x) {
      const char c = rows[y][x];
      auto t = parse_glyph(c);
      if (!t) {
        throw MapError(std::string("unknown glyph '") + c + "' at row " +
                       std::to_string(y + 1) + ", column " +
                       std::to_string(x + 1));
      }
      if (c == 'P' || c == 'E') {
        auto& slot = c == 'P' ? hero : enemy;
        if (slot) throw MapError(std::string("duplicate spawn '") + c + "'");
        slot = Position{x, y};
      }
      tiles.push_back(*t);
    }
  }
  if (!hero) throw MapError("missing hero spawn 'P'");
  if (!enemy) throw MapError("missing enemy spawn 'E'");
  return BattleMap(std::move(name), width, height, std::move(tiles), *hero,
                   *enemy);
}

BattleMap load_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MapError("cannot open map " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_map(buffer.str(), path.stem().string());
}

const char* sight_name(Sight s) {
  switch (s) {
    case Sight::kClear: return "clear";
    case Sight::kHalfCover: return "half_cover";
    case Sight::kBlocked: return "blocked";
  }
  return "clear";
}

namespace {

// Floor division for a possibly negative numerator and positive denominator.
int floor_div(int num, int den) {
  int q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

}  // namespace

Sight line_of_sight(const BattleMap& map, Position from, Position to) {
  const int dx = to.x - from.x;
  const int dy = to.y - from.y;
  const int n = std::max(std::abs(dx), std::abs(dy));
  const bool x_major = std::abs(dx) >= std::abs(dy);
  bool cover = false;
  for (int i = 1; i < n; ++i) {
    // Point i/n of the way along the segment; the major coordinate is exact.
    const int major = (x_major ? from.x : from.y) +
                      i * ((x_major ? dx : dy) > 0 ? 1 : -1);
    const int num = i * (x_major ? dy : dx);
    const int q = floor_div(num, n);
    const int r = num - q * n;  // 0 <= r < n
    const int base = (x_major ? from.y : from.x) + q;
    Position cand[2];
    int count = 1;
    auto at = [&](int minor) {
      return x_major ? Position{major, minor} : Position{minor, major};
    };
    if (r == 0) {
      cand[0] = at(base);
    } else if (2 * r == n) {
      cand[0] = at(base);
      cand[1] = at(base + 1);
      count = 2;
    } else {
      cand[0] = at(2 * r < n ? base : base + 1);
    }
    bool all_block = true;
    for (int k = 0; k < count; ++k) {
      if (!map.blocks_sight(cand[k])) all_block = false;
      if (map.at(cand[k]) == Terrain::kBarrel && tile_distance(cand[k], to) == 1) {
        cover = true;
      }
    }
    if (all_block) return Sight::kBlocked;
  }
  return cover ? Sight::kHalfCover : Sight::kClear;
}

Position step(Position p, Direction d) {
  switch (d) {
    case Direction::kUpLeft: return {p.x - 1, p.y - 1};
    case Direction::kLeft: return {p.x - 1, p.y};
    case Direction::kDownLeft: return {p.x - 1, p.y + 1};
    case Direction::kUp: return {p.x, p.y - 1};
    case Direction::kDown: return {p.x, p.y + 1};
    case Direction::kUpRight: return {p.x + 1, p.y - 1};
    case Direction::kRight: return {p.x + 1, p.y};
    case Direction::kDownRight: return {p.x + 1, p.y + 1};
  }
  return p;
}

int try_movement_cost(const BattleMap& map, Position from, Position to) {
  if (tile_distance(from, to) != 1) return -1;
  if (!map.passable(to)) return -1;
  if (from.x != to.x && from.y != to.y) {
    const bool a = map.passable({to.x, from.y});
    const bool b = map.passable({from.x, to.y});
    if (!a && !b) return -1;
  }
  return map.at(to) == Terrain::kWater ? 2 * kFeetPerTile : kFeetPerTile;
}

int movement_budget_cost(const BattleMap& map, Position from, Position to) {
  if (tile_distance(from, to) != 1) throw MapError("tiles are not adjacent");
  const int cost = try_movement_cost(map, from, to);
  if (cost < 0) throw MapError("destination is impassable");
  return cost;
}

std::vector<Position> reachable(const BattleMap& map, Position from,
                                int budget_ft,
                                std::span<const Position> occupied) {
  const int w = map.width();
  const int h = map.height();
  const int kInf = std::numeric_limits<int>::max();
  std::vector<int> best(w * h, kInf);
  std::vector<bool> blocked(w * h, false);
  for (Position p : occupied) {
    if (map.in_bounds(p) && p != from) blocked[p.y * w + p.x] = true;
  }
  using Entry = std::tuple<int, int, int>;  // cost, y, x
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  if (map.in_bounds(from)) {
    best[from.y * w + from.x] = 0;
    frontier.emplace(0, from.y, from.x);
  }
  while (!frontier.empty()) {
    auto [cost, y, x] = frontier.top();
    frontier.pop();
    if (cost > best[y * w + x]) continue;
    for (Direction d : kDirections) {
      const Position next = step({x, y}, d);
      if (!map.in_bounds(next) || blocked[next.y * w + next.x]) continue;
      const int c = try_movement_cost(map, {x, y}, next);
      if (c < 0 || cost + c > budget_ft) continue;
      if (cost + c < best[next.y * w + next.x]) {
        best[next.y * w + next.x] = cost + c;
        frontier.emplace(cost + c, next.y, next.x);
      }
    }
  }
  std::vector<Position> out;
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      if (best[y * w + x] != kInf) out.push_back({x, y});
    }
  }
  return out;
}

std::string render_terrain(const BattleMap& map) {
  std::string out;
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      switch (map.at({x, y})) {
        case Terrain::kFloor: out += '.'; break;
        case Terrain::kOutOfMap: out += '_'; break;
        case Terrain::kWall: out += '*'; break;
        case Terrain::kBarrel: out += 'o'; break;
        case Terrain::kWater: out += '~'; break;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace dndrl
