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

#include "dndrl/observation.h"

#include <algorithm>

namespace dndrl {

namespace {

int terrain_code(Terrain t) {
  switch (t) {
    case Terrain::kFloor: return 1;
    case Terrain::kWater: return 2;
    case Terrain::kWall: return 3;
    case Terrain::kBarrel: return 4;
    case Terrain::kOutOfMap: return 5;
  }
  return 0;
}

int action_type(const Action& a) {
  switch (a.kind) {
    case ActionKind::kEndTurn: return 0;
    case ActionKind::kMeleeAttack: return 1;
    case ActionKind::kRangedAttack: return 2;
    case ActionKind::kCastSpell: return 3;
    case ActionKind::kDash:
    case ActionKind::kDashBonus: return 4;
    case ActionKind::kDisengage:
    case ActionKind::kDisengageBonus: return 5;
    case ActionKind::kDodge: return 6;
    case ActionKind::kProne: return 7;
    case ActionKind::kStand: return 8;
    case ActionKind::kSecondWind: return 9;
    case ActionKind::kActionSurge: return 10;
    case ActionKind::kTwoWeaponAttack: return 11;
    case ActionKind::kMove: return 12 + static_cast<int>(*a.direction);
  }
  return 0;
}

}  // namespace

ActionEncoding encode_action(const GameState& state, const Action& a) {
  const EntityState& me = state.active();
  ActionEncoding enc;
  enc.action_type = action_type(a);
  enc.binary_action = a.kind == ActionKind::kDashBonus ||
                      a.kind == ActionKind::kDisengageBonus;
  if (a.spell) enc.binary_subtype = static_cast<int>(*a.spell) + 1;
  if (a.weapon_slot >= 0) {
    const WeaponId w = me.sheet->weapons.at(a.weapon_slot);
    enc.weapon_type = static_cast<int>(w) + 1;
    enc.binary_subtype = 1 + static_cast<int>(std::count(
                                 me.sheet->weapons.begin(),
                                 me.sheet->weapons.begin() + a.weapon_slot, w));
  }
  if (a.target >= 0) {
    const EntityState& t = state.entity(a.target);
    enc.entity_type =
        t.id == me.id ? 1 : 2 + static_cast<int>(t.character_class());
    enc.terrain_type = terrain_code(state.map->at(t.pos));
    if (t.id != me.id &&
        line_of_sight(*state.map, me.pos, t.pos) == Sight::kHalfCover) {
      enc.terrain_type = 6;
    }
  }
  if (a.direction) {
    enc.direction = 1 + static_cast<int>(*a.direction);
    enc.terrain_type = terrain_code(state.map->at(step(me.pos, *a.direction)));
  }
  return enc;
}

std::optional<int> decode_action(const std::vector<ActionEncoding>& legal,
                                 const ActionEncoding& enc) {
  auto it = std::find(legal.begin(), legal.end(), enc);
  if (it == legal.end()) return std::nullopt;
  return static_cast<int>(it - legal.begin());
}

Observation encode_observation(const GameState& state, int pov) {
  Observation obs;
  const BattleMap& map = *state.map;
  const EntityState& me = state.entity(pov);
  obs.own_class = static_cast<int>(me.character_class());

  std::vector<const EntityState*> visible;
  for (int id : state.enemies_of(pov)) {
    const EntityState& e = state.entity(id);
    if (line_of_sight(map, me.pos, e.pos) != Sight::kBlocked) {
      visible.push_back(&e);
    }
  }
  std::sort(visible.begin(), visible.end(),
            [&](const EntityState* a, const EntityState* b) {
              return tile_distance(me.pos, a->pos) < tile_distance(me.pos, b->pos);
            });
  const EntityState* nearest = visible.empty() ? nullptr : visible.front();
  {
    const auto enemies = state.enemies_of(pov);
    if (!enemies.empty()) {
      obs.enemy_class =
          static_cast<int>(state.entity(enemies.front()).character_class());
    } else {
      for (const EntityState& e : state.entities) {
        if (e.team != me.team) obs.enemy_class = static_cast<int>(e.character_class());
      }
    }
  }

  std::vector<Position> reach;
  if (me.alive() && !me.conditions.prone && state.active_id() == pov) {
    std::vector<Position> others;
    for (const EntityState& e : state.entities) {
      if (e.alive() && e.id != pov) others.push_back(e.pos);
    }
    reach = reachable(map, me.pos, me.economy.movement_left, others);
  }

  auto set = [&](int ch, int row, int col, double v) {
    obs.tiles[ch * kViewCells + row * kView + col] = v;
  };
  for (int row = 0; row < kView; ++row) {
    for (int col = 0; col < kView; ++col) {
      const Position p{me.pos.x + col - kView / 2, me.pos.y + row - kView / 2};
      const Terrain t = map.at(p);
      set(kChPassable, row, col, map.passable(p) ? 1 : 0);
      set(kChWall, row, col, t == Terrain::kWall);
      set(kChOutOfMap, row, col, t == Terrain::kOutOfMap);
      set(kChBarrel, row, col, t == Terrain::kBarrel);
      set(kChWater, row, col, t == Terrain::kWater);
      const bool in_sight =
          t != Terrain::kOutOfMap &&
          (p == me.pos || line_of_sight(map, me.pos, p) != Sight::kBlocked);
      set(kChInSight, row, col, in_sight);
      for (const EntityState& e : state.entities) {
        if (!e.alive() || e.pos != p) continue;
        if (e.id == pov) {
          set(kChSelf, row, col, 1);
        } else if (e.team == me.team) {
          set(kChAlly, row, col, 1);
        } else if (in_sight) {
          set(kChEnemy, row, col, 1);
          set(kChEnemyHp, row, col, static_cast<double>(e.hp) / e.max_hp());
          set(kChEnemyProne, row, col, e.conditions.prone);
          set(kChEnemyDodging, row, col, e.conditions.dodging);
        }
      }
      if (std::binary_search(reach.begin(), reach.end(), p)) {
        set(kChReachable, row, col, 1);
      }
      bool threatened = false;
      for (const EntityState* e : visible) {
        bool has_melee = false;
        for (WeaponId w : e->sheet->weapons) has_melee |= weapon(w).melee();
        if (has_melee && tile_distance(e->pos, p) == 1) threatened = true;
      }
      set(kChThreatened, row, col, threatened);
      double cover = 0;
      double dist = 1;
      if (nearest && t != Terrain::kOutOfMap) {
        if (p != nearest->pos) {
          const Sight s = line_of_sight(map, nearest->pos, p);
          cover = s == Sight::kBlocked ? 1.0 : s == Sight::kHalfCover ? 0.5 : 0.0;
        }
        dist = std::min(1.0, tile_distance(p, nearest->pos) / 8.0);
      }
      set(kChCover, row, col, cover);
      set(kChDistance, row, col, dist);
    }
  }

  auto& s = obs.scalars;
  s[0] = static_cast<double>(me.hp) / me.max_hp();
  s[1] = std::min(1.0, me.economy.movement_left / (3.0 * me.speed()));
  s[2] = me.economy.actions > 0;
  s[3] = me.economy.bonus_actions > 0;
  s[4] = me.economy.reactions > 0;
  s[5] = me.second_wind_uses > 0;
  s[6] = me.action_surge_uses > 0;
  const int slots = spell_slots_at_level2(me.character_class());
  s[7] = slots > 0 ? static_cast<double>(me.spell_slots) / slots : 0.0;
  if (nearest) {
    s[8] = static_cast<double>(nearest->pos.x - me.pos.x) / map.width();
    s[9] = static_cast<double>(nearest->pos.y - me.pos.y) / map.height();
  }
  s[10] = std::min(1.0, static_cast<double>(state.round) / state.max_rounds);
  s[11] = me.conditions.prone;
  s[12] = me.conditions.dodging;

  if (me.alive() && !state.initiative.empty() && state.active_id() == pov) {
    for (const Action& a : enumerate_actions(state)) {
      obs.legal.push_back(encode_action(state, a));
    }
  }
  return obs;
}

}  // namespace dndrl
