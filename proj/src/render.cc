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

#include "dndrl/render.h"

#include <cstdio>
#include <stdexcept>

namespace dndrl {

namespace {

char terrain_glyph(Terrain t) {
  switch (t) {
    case Terrain::kFloor: return '.';
    case Terrain::kOutOfMap: return '_';
    case Terrain::kWall: return '*';
    case Terrain::kBarrel: return 'o';
    case Terrain::kWater: return '~';
  }
  return '?';
}

}  // namespace

std::string render_ascii(const GameState& state, int viewer) {
  const EntityState& me = state.entity(viewer);
  if (!me.alive()) throw std::invalid_argument("render_ascii: viewer is dead");
  const BattleMap& map = *state.map;
  std::string out;
  out.reserve(static_cast<size_t>((map.width() + 1) * map.height()));
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      const Position p{x, y};
      const Terrain t = map.at(p);
      if (t == Terrain::kOutOfMap) {
        out += '_';
        continue;
      }
      const bool seen =
          p == me.pos || line_of_sight(map, me.pos, p) != Sight::kBlocked;
      if (!seen) {
        out += ' ';
        continue;
      }
      char glyph = terrain_glyph(t);
      for (const EntityState& e : state.entities) {
        if (!e.alive() || e.pos != p) continue;
        if (e.id == viewer) {
          glyph = 'P';
        } else {
          glyph = e.team == me.team ? 'A' : 'E';
        }
      }
      out += glyph;
    }
    out += '\n';
  }
  return out;
}

std::string format_health_percent(int hp, int max_hp) {
  if (max_hp <= 0) throw std::invalid_argument("max_hp must be positive");
  const double pct = 100.0 * hp / max_hp;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.8f", pct);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  return "[" + s + "]";
}

}  // namespace dndrl
