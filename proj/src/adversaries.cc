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

#include "dndrl/adversaries.h"

#include <algorithm>
#include <limits>
#include <queue>

namespace dndrl {

namespace {

double hit_chance(int to_hit, int ac, Advantage adv) {
  // Natural 1 always misses and natural 20 always hits.
  const int need = std::clamp(ac - to_hit, 2, 20);
  const double p = (21 - need) / 20.0;
  switch (adv) {
    case Advantage::kAdvantage: return 1 - (1 - p) * (1 - p);
    case Advantage::kDisadvantage: return p * p;
    case Advantage::kNormal: break;
  }
  return p;
}

double save_fail_chance(int bonus, int dc) {
  const int need = dc - bonus;  // pass on d20 >= need
  return std::clamp((need - 1) / 20.0, 0.0, 1.0);
}

constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;

// Movement cost from every tile to the nearest tile adjacent to `goal`.
std::vector<int> distance_field(const GameState& state, int self, Position goal) {
  const BattleMap& map = *state.map;
  const int w = map.width();
  const int h = map.height();
  std::vector<int> dist(static_cast<size_t>(w * h), kUnreachable);
  auto blocked = [&](Position p) {
    for (const EntityState& e : state.entities) {
      if (e.alive() && e.id != self && e.pos == p) return true;
    }
    return false;
  };
  using Item = std::pair<int, int>;  // cost, index
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (Direction d : kDirections) {
    const Position p = step(goal, d);
    if (!map.passable(p) || blocked(p)) continue;
    const int idx = p.y * w + p.x;
    dist[idx] = 0;
    pq.push({0, idx});
  }
  while (!pq.empty()) {
    const auto [c, idx] = pq.top();
    pq.pop();
    if (c > dist[idx]) continue;
    const Position n{idx % w, idx / w};
    for (Direction d : kDirections) {
      const Position t = step(n, d);
      if (!map.passable(t) || blocked(t)) continue;
      const int cost = try_movement_cost(map, t, n);
      if (cost < 0) continue;
      const int tidx = t.y * w + t.x;
      if (c + cost < dist[tidx]) {
        dist[tidx] = c + cost;
        pq.push({dist[tidx], tidx});
      }
    }
  }
  return dist;
}

bool is_attack(const Action& a) {
  return a.kind == ActionKind::kMeleeAttack ||
         a.kind == ActionKind::kRangedAttack ||
         a.kind == ActionKind::kTwoWeaponAttack ||
         (a.kind == ActionKind::kCastSpell &&
          spell(*a.spell).effect != SpellEffect::kHeal &&
          spell(*a.spell).effect != SpellEffect::kWard);
}

}  // namespace

double expected_damage(const GameState& state, const Action& a) {
  if (!is_attack(a)) return 0;
  const EntityState& me = state.active();
  const EntityState& target = state.entity(a.target);
  const Sight sight = line_of_sight(*state.map, me.pos, target.pos);
  const int ac = target.armor_class() + cover_ac_bonus(sight);
  if (a.kind == ActionKind::kCastSpell) {
    const Spell& sp = spell(*a.spell);
    switch (sp.effect) {
      case SpellEffect::kAttack: {
        const Advantage adv =
            attack_advantage(me, target, AttackMode::kRanged, sp.range);
        return hit_chance(me.sheet->spell_attack_bonus(), ac, adv) *
               sp.dice.mean();
      }
      case SpellEffect::kAutoHit:
        return sp.dice.mean();
      case SpellEffect::kSave: {
        const double fail = save_fail_chance(
            target.sheet->save_bonus(sp.save_ability), me.sheet->spell_save_dc());
        const double on_save = sp.half_on_save ? 0.5 : 0.0;
        return sp.dice.mean() * (fail + (1 - fail) * on_save);
      }
      default:
        return 0;
    }
  }
  const Weapon& w = weapon(me.sheet->weapons.at(a.weapon_slot));
  const AttackMode mode = a.kind == ActionKind::kRangedAttack
                              ? AttackMode::kRanged
                              : AttackMode::kMelee;
  const Advantage adv = attack_advantage(me, target, mode, w.normal_range);
  int mod = weapon_damage_modifier(*me.sheet, w, mode);
  if (a.kind == ActionKind::kTwoWeaponAttack) mod = std::min(0, mod);
  double dmg = std::max(0.0, w.damage.mean() + mod);
  return hit_chance(weapon_attack_bonus(*me.sheet, w, mode), ac, adv) * dmg;
}

Action rules_policy(const GameState& state) {
  const auto legal = enumerate_actions(state);
  auto find = [&](ActionKind k) -> const Action* {
    for (const Action& a : legal) {
      if (a.kind == k) return &a;
    }
    return nullptr;
  };
  if (legal.size() == 1) return legal[0];
  const EntityState& me = state.active();

  if (me.economy.attack_hit) {
    if (const Action* a = find(ActionKind::kActionSurge)) return *a;
  }

  // Nearest visible enemy.
  int nearest = -1;
  int nearest_dist = std::numeric_limits<int>::max();
  for (int id : state.enemies_of(me.id)) {
    const EntityState& e = state.entity(id);
    if (line_of_sight(*state.map, me.pos, e.pos) == Sight::kBlocked) continue;
    const int d = distance_ft(me.pos, e.pos);
    if (d < nearest_dist) {
      nearest_dist = d;
      nearest = id;
    }
  }
  if (nearest >= 0) {
    const Action* best = nullptr;
    double best_ev = 0;
    for (const Action& a : legal) {
      if (!is_attack(a) || a.target != nearest) continue;
      const double ev = expected_damage(state, a);
      if (ev > best_ev) {
        best_ev = ev;
        best = &a;
      }
    }
    if (best) return *best;
  }

  if (2 * me.hp < me.max_hp()) {
    if (const Action* a = find(ActionKind::kSecondWind)) return *a;
  }

  if (me.economy.actions > 0) {
    if (const Action* a = find(ActionKind::kStand)) return *a;
    // Closest enemy by straight-line distance, visible or not.
    int goal = -1;
    int goal_dist = std::numeric_limits<int>::max();
    for (int id : state.enemies_of(me.id)) {
      const int d = distance_ft(me.pos, state.entity(id).pos);
      if (d < goal_dist) {
        goal_dist = d;
        goal = id;
      }
    }
    if (goal >= 0 && goal_dist > kFeetPerTile) {
      const auto field = distance_field(state, me.id, state.entity(goal).pos);
      const int w = state.map->width();
      const int here = field[me.pos.y * w + me.pos.x];
      const Action* best = nullptr;
      int best_cost = here;
      for (const Action& a : legal) {
        if (a.kind != ActionKind::kMove) continue;
        const Position dest = step(me.pos, *a.direction);
        const int c = field[dest.y * w + dest.x];
        if (c < best_cost) {
          best_cost = c;
          best = &a;
        }
      }
      if (best) return *best;
    }
  }
  return Action::end_turn();
}

Action random_policy(const GameState& state, RngStream& rng) {
  const auto legal = enumerate_actions(state);
  return legal[rng.uniform_int(0, static_cast<int>(legal.size()) - 1)];
}

}  // namespace dndrl
