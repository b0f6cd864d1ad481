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

#include "dndrl/engine.h"

#include <algorithm>
#include <tuple>

namespace dndrl {

// ---------------------------------------------------------------------------
// Small type helpers declared in game_state.h

bool EntityState::knows(SpellId s) const {
  return std::find(sheet->spells.begin(), sheet->spells.end(), s) !=
         sheet->spells.end();
}

std::vector<int> GameState::enemies_of(int id) const {
  std::vector<int> out;
  const Team team = entities.at(id).team;
  for (const EntityState& e : entities) {
    if (e.team != team && e.alive()) out.push_back(e.id);
  }
  return out;
}

bool GameState::occupied(Position p) const {
  for (const EntityState& e : entities) {
    if (e.alive() && e.pos == p) return true;
  }
  return false;
}

const char* action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::kEndTurn: return "end_turn";
    case ActionKind::kMeleeAttack: return "melee_attack";
    case ActionKind::kRangedAttack: return "ranged_attack";
    case ActionKind::kCastSpell: return "cast_spell";
    case ActionKind::kMove: return "move";
    case ActionKind::kDash: return "dash";
    case ActionKind::kDashBonus: return "dash_bonus";
    case ActionKind::kDisengage: return "disengage";
    case ActionKind::kDisengageBonus: return "disengage_bonus";
    case ActionKind::kDodge: return "dodge";
    case ActionKind::kProne: return "prone";
    case ActionKind::kStand: return "stand";
    case ActionKind::kSecondWind: return "second_wind";
    case ActionKind::kActionSurge: return "action_surge";
    case ActionKind::kTwoWeaponAttack: return "two_weapon_attack";
  }
  return "end_turn";
}

std::optional<ActionKind> parse_action_kind(std::string_view name) {
  for (int i = 0; i < kActionKindCount; ++i) {
    const auto k = static_cast<ActionKind>(i);
    if (name == action_kind_name(k)) return k;
  }
  return std::nullopt;
}

bool Action::is_major() const {
  switch (kind) {
    case ActionKind::kMeleeAttack:
    case ActionKind::kRangedAttack:
    case ActionKind::kCastSpell:
    case ActionKind::kDash:
    case ActionKind::kDisengage:
    case ActionKind::kDodge:
    case ActionKind::kProne:
      return true;
    default:
      return false;
  }
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kOngoing: return "ongoing";
    case Outcome::kHeroWon: return "hero_won";
    case Outcome::kHeroLost: return "hero_lost";
    case Outcome::kTie: return "tie";
  }
  return "ongoing";
}

// ---------------------------------------------------------------------------

namespace {

void begin_turn(GameState& state) {
  EntityState& e = state.active();
  e.economy = Economy{};
  e.economy.movement_left = e.speed();
  e.conditions.dodging = false;
  e.conditions.shielded = false;
}

void end_turn(GameState& state) {
  ++state.turn;
  ++state.active_index;
  if (state.active_index >= static_cast<int>(state.initiative.size())) {
    state.active_index = 0;
    ++state.round;
  }
  begin_turn(state);
}

// Drops dead entities from the initiative order. If the active entity died,
// its turn ends.
void prune_initiative(GameState& state) {
  const int active = state.active_id();
  const bool active_died = !state.entity(active).alive();
  std::vector<int> order;
  int new_index = 0;
  bool found = false;
  for (int i = 0; i < static_cast<int>(state.initiative.size()); ++i) {
    const int id = state.initiative[i];
    if (id == active && !found) {
      new_index = static_cast<int>(order.size());
      found = true;
    }
    if (state.entity(id).alive()) order.push_back(id);
  }
  if (order.size() == state.initiative.size()) return;
  state.initiative = std::move(order);
  if (state.initiative.empty()) {
    state.active_index = 0;
    return;
  }
  if (active_died) {
    ++state.turn;
    if (new_index >= static_cast<int>(state.initiative.size())) {
      new_index = 0;
      ++state.round;
    }
    state.active_index = new_index;
    begin_turn(state);
  } else {
    state.active_index = new_index;
  }
}

struct VisibleEnemy {
  int id;
  Sight sight;
  int dist;
};

std::vector<VisibleEnemy> visible_enemies(const GameState& state,
                                          const EntityState& me) {
  std::vector<VisibleEnemy> out;
  for (int id : state.enemies_of(me.id)) {
    const EntityState& e = state.entity(id);
    const Sight s = line_of_sight(*state.map, me.pos, e.pos);
    if (s != Sight::kBlocked) out.push_back({id, s, distance_ft(me.pos, e.pos)});
  }
  return out;
}

EntitySnapshot snapshot(const EntityState& e) { return {e.id, e.hp, e.pos}; }

void fill_after(const GameState& state, CombatEvent& ev) {
  ev.after.clear();
  for (const EntityState& e : state.entities) ev.after.push_back(snapshot(e));
}

RollRecord d20_record(const char* label, const D20Outcome& r, int modifier) {
  return RollRecord{label, r.dice, modifier, r.total};
}

RollRecord dice_record(const char* label, const DiceRoll& r) {
  return RollRecord{label, r.faces, r.modifier, r.total};
}

// The shield spell turns a hit into a miss when +5 AC is enough.
void maybe_shield(GameState& state, int target_id, AttackResult& r,
                  CombatEvent& ev) {
  EntityState& t = state.entity(target_id);
  if (!r.hit || r.roll.critical_hit || !t.alive()) return;
  if (!t.knows(SpellId::kShield) || t.economy.reactions < 1 ||
      t.spell_slots < 1) {
    return;
  }
  if (r.roll.total >= r.effective_ac + 5) return;
  t.spell_slots -= 1;
  t.economy.reactions -= 1;
  t.conditions.shielded = true;
  r.effective_ac += 5;
  r.hit = false;
  ev.note = "shield";
}

void weapon_attack(GameState& state, int attacker_id, int target_id, int slot,
                   AttackMode mode, bool offhand, CombatEvent& ev) {
  const EntityState& attacker = state.entity(attacker_id);
  const Weapon& w = weapon(attacker.sheet->weapons.at(slot));
  const Sight sight =
      line_of_sight(*state.map, attacker.pos, state.entity(target_id).pos);
  AttackResult r = attack_roll(attacker, state.entity(target_id), w, mode,
                               sight, state.rng);
  ev.target = target_id;
  ev.rolls.push_back(d20_record("attack", r.roll, r.to_hit));
  maybe_shield(state, target_id, r, ev);
  ev.hit = r.hit;
  ev.critical = r.hit && r.roll.critical_hit;

  EntityState& me = state.entity(attacker_id);
  if (w.melee() && w.has(kLight) && !offhand) me.economy.light_melee_slot = slot;
  if (!r.hit) return;

  int mod = weapon_damage_modifier(*me.sheet, w, mode);
  if (offhand) mod = std::min(0, mod);
  const DiceRoll dmg = roll_detailed(w.damage.with_modifier(mod), state.rng,
                                     ev.critical);
  ev.rolls.push_back(dice_record("damage", dmg));
  int total = std::max(0, dmg.total);
  const bool sneak_weapon = w.has(kFinesse) || mode == AttackMode::kRanged;
  if (me.sheet->has(FeatureId::kSneakAttack) && !me.economy.sneak_attack_used &&
      sneak_weapon && r.roll.advantage == Advantage::kAdvantage) {
    const DiceRoll sneak =
        roll_detailed(sneak_attack_dice(), state.rng, ev.critical);
    ev.rolls.push_back(dice_record("sneak_attack", sneak));
    total += sneak.total;
    me.economy.sneak_attack_used = true;
  }
  me.economy.attack_hit = true;
  ev.damage = total;
  EntityState& t = state.entity(target_id);
  t = apply_damage(std::move(t), total, w.damage_type);
}

int best_melee_slot(const EntityState& e) {
  int best = -1;
  double best_mean = -1;
  for (int i = 0; i < static_cast<int>(e.sheet->weapons.size()); ++i) {
    const Weapon& w = weapon(e.sheet->weapons[i]);
    if (!w.melee()) continue;
    if (w.damage.mean() > best_mean) {
      best_mean = w.damage.mean();
      best = i;
    }
  }
  return best;
}

void cast_spell(GameState& state, int caster_id, SpellId id, int target_id,
                CombatEvent& ev) {
  const Spell& sp = spell(id);
  EntityState& caster = state.entity(caster_id);
  caster.economy.actions -= 1;
  if (sp.level > 0) caster.spell_slots -= 1;
  ev.target = target_id;

  switch (sp.effect) {
    case SpellEffect::kAttack: {
      const Sight sight =
          line_of_sight(*state.map, caster.pos, state.entity(target_id).pos);
      AttackResult r = spell_attack_roll(caster, state.entity(target_id), sp,
                                         sight, state.rng);
      ev.rolls.push_back(d20_record("spell_attack", r.roll, r.to_hit));
      maybe_shield(state, target_id, r, ev);
      ev.hit = r.hit;
      ev.critical = r.hit && r.roll.critical_hit;
      if (!r.hit) return;
      const DiceRoll dmg = roll_detailed(sp.dice, state.rng, ev.critical);
      ev.rolls.push_back(dice_record("damage", dmg));
      ev.damage = dmg.total;
      state.entity(caster_id).economy.attack_hit = true;
      break;
    }
    case SpellEffect::kAutoHit: {
      const DiceRoll dmg = roll_detailed(sp.dice, state.rng);
      ev.rolls.push_back(dice_record("damage", dmg));
      ev.hit = true;
      ev.damage = dmg.total;
      break;
    }
    case SpellEffect::kSave: {
      const int dc = caster.sheet->spell_save_dc();
      const SaveResult save =
          saving_throw(state.entity(target_id), sp.save_ability, dc, state.rng);
      ev.rolls.push_back(d20_record("save", save.roll, save.bonus));
      ev.hit = !save.passed;
      if (save.passed && !sp.half_on_save) return;
      const DiceRoll dmg = roll_detailed(sp.dice, state.rng);
      ev.rolls.push_back(dice_record("damage", dmg));
      ev.damage = save.passed ? dmg.total / 2 : dmg.total;
      break;
    }
    case SpellEffect::kHeal: {
      const int mod = caster.sheet->modifier(caster.sheet->spellcasting_ability());
      const DiceRoll heal = roll_detailed(sp.dice.with_modifier(mod), state.rng);
      ev.rolls.push_back(dice_record("healing", heal));
      EntityState& t = state.entity(target_id);
      const int before = t.hp;
      t = apply_healing(std::move(t), std::max(0, heal.total));
      ev.healing = t.hp - before;
      return;
    }
    case SpellEffect::kWard:
      return;
  }
  if (ev.damage > 0 || ev.hit) {
    EntityState& t = state.entity(target_id);
    t = apply_damage(std::move(t), ev.damage, sp.damage_type);
  }
}

CombatEvent make_event(const GameState& state, int actor, const Action& a) {
  CombatEvent ev;
  ev.round = state.round;
  ev.turn = state.turn;
  ev.actor = actor;
  ev.action = a;
  ev.text = describe_action(state, a);
  return ev;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<int> roll_initiative(const GameState& state, RngStream& rng) {
  struct Entry {
    int id;
    int total;
    int dex;
    std::uint64_t key;
  };
  std::vector<Entry> entries;
  for (const EntityState& e : state.entities) {
    if (!e.alive()) continue;
    const int d20 = rng.uniform_int(1, 20);
    entries.push_back({e.id, d20 + e.sheet->modifier(Ability::kDex),
                       e.sheet->score(Ability::kDex), 0});
  }
  bool tied = false;
  for (size_t i = 0; i < entries.size(); ++i) {
    for (size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].total == entries[j].total &&
          entries[i].dex == entries[j].dex) {
        tied = true;
      }
    }
  }
  if (tied) {
    for (Entry& e : entries) e.key = rng.next_u64();
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     return std::tie(b.total, b.dex, a.key) <
                            std::tie(a.total, a.dex, b.key);
                   });
  std::vector<int> order;
  for (const Entry& e : entries) order.push_back(e.id);
  return order;
}

GameState new_fight(const FightSetup& setup) {
  if (!setup.map) throw std::invalid_argument("new_fight: no map");
  GameState s;
  s.map = setup.map;
  s.max_rounds = setup.max_rounds;
  s.rng = RngStream(setup.seed);
  for (int i = 0; i < 2; ++i) {
    const auto& sheet = setup.sheets[i];
    if (!sheet) throw std::invalid_argument("new_fight: missing sheet");
    EntityState e;
    e.id = i;
    e.team = i == 0 ? Team::kHero : Team::kEnemy;
    e.sheet = sheet;
    e.hp = sheet->max_hp;
    e.pos = i == 0 ? setup.map->hero_spawn() : setup.map->enemy_spawn();
    e.second_wind_uses = sheet->has(FeatureId::kSecondWind) ? 1 : 0;
    e.action_surge_uses = sheet->has(FeatureId::kActionSurge) ? 1 : 0;
    e.spell_slots = spell_slots_at_level2(sheet->character_class);
    s.entities.push_back(std::move(e));
  }
  s.initiative = roll_initiative(s, s.rng);
  s.active_index = 0;
  s.round = 1;
  begin_turn(s);
  return s;
}

bool feature_available(const GameState& state, int entity, FeatureId f) {
  const EntityState& e = state.entity(entity);
  if (!e.alive() || !e.sheet->has(f)) return false;
  switch (f) {
    case FeatureId::kSecondWind:
      return e.second_wind_uses > 0 && e.economy.bonus_actions > 0;
    case FeatureId::kActionSurge:
      return e.action_surge_uses > 0 && !e.economy.action_surged;
    case FeatureId::kCunningAction:
      return e.economy.bonus_actions > 0;
    case FeatureId::kSneakAttack:
      return !e.economy.sneak_attack_used;
    case FeatureId::kSpellcasting: {
      if (e.economy.actions < 1) return false;
      for (SpellId s : e.sheet->spells) {
        if (spell(s).level == 0 || e.spell_slots > 0) return true;
      }
      return false;
    }
  }
  return false;
}

std::vector<Action> enumerate_actions(const GameState& state) {
  std::vector<Action> out;
  out.push_back(Action::end_turn());
  if (state.initiative.empty() || is_terminal(state) != Outcome::kOngoing) {
    return out;
  }
  const EntityState& me = state.active();
  const Economy& eco = me.economy;
  const auto targets = visible_enemies(state, me);
  const auto& weapons = me.sheet->weapons;
  const bool cunning = me.sheet->has(FeatureId::kCunningAction);

  if (eco.actions > 0) {
    for (int slot = 0; slot < static_cast<int>(weapons.size()); ++slot) {
      const Weapon& w = weapon(weapons[slot]);
      if (w.melee()) {
        for (const auto& t : targets) {
          if (t.dist <= kFeetPerTile) {
            out.push_back(Action::attack(ActionKind::kMeleeAttack, slot, t.id));
          }
        }
      }
      if (w.ranged_capable()) {
        for (const auto& t : targets) {
          if (t.dist <= w.long_range) {
            out.push_back(Action::attack(ActionKind::kRangedAttack, slot, t.id));
          }
        }
      }
    }
  }
  if (eco.bonus_actions > 0 && eco.light_melee_slot >= 0) {
    for (int slot = 0; slot < static_cast<int>(weapons.size()); ++slot) {
      const Weapon& w = weapon(weapons[slot]);
      if (slot == eco.light_melee_slot || !w.melee() || !w.has(kLight)) continue;
      for (const auto& t : targets) {
        if (t.dist <= kFeetPerTile) {
          out.push_back(Action::attack(ActionKind::kTwoWeaponAttack, slot, t.id));
        }
      }
    }
  }

  if (eco.actions > 0) out.push_back(Action::simple(ActionKind::kDash));
  if (eco.bonus_actions > 0 && cunning) {
    out.push_back(Action::simple(ActionKind::kDashBonus));
  }
  if (eco.actions > 0) out.push_back(Action::simple(ActionKind::kDisengage));
  if (eco.bonus_actions > 0 && cunning) {
    out.push_back(Action::simple(ActionKind::kDisengageBonus));
  }
  if (eco.actions > 0) out.push_back(Action::simple(ActionKind::kDodge));

  if (!me.conditions.prone) {
    for (Direction d : kDirections) {
      const Position dest = step(me.pos, d);
      const int cost = try_movement_cost(*state.map, me.pos, dest);
      if (cost > 0 && cost <= eco.movement_left && !state.occupied(dest)) {
        out.push_back(Action::move(d));
      }
    }
  }

  if (!me.conditions.prone) {
    out.push_back(Action::simple(ActionKind::kProne));
  } else if (eco.movement_left >= me.speed() / 2) {
    out.push_back(Action::simple(ActionKind::kStand));
  }

  if (feature_available(state, me.id, FeatureId::kSecondWind)) {
    out.push_back(Action::simple(ActionKind::kSecondWind));
  }
  if (feature_available(state, me.id, FeatureId::kActionSurge)) {
    out.push_back(Action::simple(ActionKind::kActionSurge));
  }

  if (eco.actions > 0) {
    for (SpellId id : me.sheet->spells) {
      const Spell& sp = spell(id);
      if (sp.cost != SpellCost::kAction) continue;
      if (sp.level > 0 && me.spell_slots < 1) continue;
      if (sp.effect == SpellEffect::kHeal) {
        out.push_back(Action::cast(id, me.id));
        continue;
      }
      for (const auto& t : targets) {
        if (t.dist <= sp.range) out.push_back(Action::cast(id, t.id));
      }
    }
  }
  return out;
}

std::vector<CombatEvent> apply_action(GameState& state, const Action& action) {
  if (is_terminal(state) != Outcome::kOngoing) {
    throw IllegalActionError("the fight is over");
  }
  const auto legal = enumerate_actions(state);
  if (std::find(legal.begin(), legal.end(), action) == legal.end()) {
    throw IllegalActionError(std::string("illegal action '") +
                             action_kind_name(action.kind) + "' for entity " +
                             std::to_string(state.active_id()));
  }

  std::vector<CombatEvent> events;
  const int actor = state.active_id();
  CombatEvent ev = make_event(state, actor, action);

  switch (action.kind) {
    case ActionKind::kEndTurn:
      end_turn(state);
      break;
    case ActionKind::kMeleeAttack:
    case ActionKind::kRangedAttack: {
      state.entity(actor).economy.actions -= 1;
      const AttackMode mode = action.kind == ActionKind::kMeleeAttack
                                  ? AttackMode::kMelee
                                  : AttackMode::kRanged;
      weapon_attack(state, actor, action.target, action.weapon_slot, mode,
                    false, ev);
      break;
    }
    case ActionKind::kTwoWeaponAttack:
      state.entity(actor).economy.bonus_actions -= 1;
      weapon_attack(state, actor, action.target, action.weapon_slot,
                    AttackMode::kMelee, true, ev);
      break;
    case ActionKind::kCastSpell:
      cast_spell(state, actor, *action.spell, action.target, ev);
      break;
    case ActionKind::kMove: {
      const Position from = state.entity(actor).pos;
      const Position dest = step(from, *action.direction);
      const int cost = movement_budget_cost(*state.map, from, dest);
      for (int enemy_id : state.enemies_of(actor)) {
        EntityState& enemy = state.entity(enemy_id);
        const EntityState& me = state.entity(actor);
        if (me.economy.disengaged || !me.alive()) break;
        if (enemy.economy.reactions < 1) continue;
        if (distance_ft(from, enemy.pos) > kFeetPerTile ||
            distance_ft(dest, enemy.pos) <= kFeetPerTile) {
          continue;
        }
        const int slot = best_melee_slot(enemy);
        if (slot < 0) continue;
        enemy.economy.reactions -= 1;
        Action oa = Action::attack(ActionKind::kMeleeAttack, slot, actor);
        CombatEvent reaction = make_event(state, enemy_id, oa);
        reaction.reaction = true;
        reaction.note = "opportunity_attack";
        weapon_attack(state, enemy_id, actor, slot, AttackMode::kMelee, false,
                      reaction);
        fill_after(state, reaction);
        events.push_back(std::move(reaction));
      }
      EntityState& me = state.entity(actor);
      if (me.alive()) {
        me.pos = dest;
        me.economy.movement_left -= cost;
      } else {
        ev.note = "killed_while_moving";
      }
      break;
    }
    case ActionKind::kDash: {
      EntityState& me = state.entity(actor);
      me.economy.actions -= 1;
      me.economy.movement_left += me.speed();
      break;
    }
    case ActionKind::kDashBonus: {
      EntityState& me = state.entity(actor);
      me.economy.bonus_actions -= 1;
      me.economy.movement_left += me.speed();
      break;
    }
    case ActionKind::kDisengage:
      state.entity(actor).economy.actions -= 1;
      state.entity(actor).economy.disengaged = true;
      break;
    case ActionKind::kDisengageBonus:
      state.entity(actor).economy.bonus_actions -= 1;
      state.entity(actor).economy.disengaged = true;
      break;
    case ActionKind::kDodge:
      state.entity(actor).economy.actions -= 1;
      state.entity(actor).conditions.dodging = true;
      break;
    case ActionKind::kProne:
      state.entity(actor).conditions.prone = true;
      break;
    case ActionKind::kStand: {
      EntityState& me = state.entity(actor);
      me.economy.movement_left -= me.speed() / 2;
      me.conditions.prone = false;
      break;
    }
    case ActionKind::kSecondWind: {
      EntityState& me = state.entity(actor);
      me.economy.bonus_actions -= 1;
      me.second_wind_uses -= 1;
      const DiceRoll heal =
          roll_detailed(RollSpec(1, 10, me.sheet->level), state.rng);
      ev.rolls.push_back(dice_record("healing", heal));
      const int before = me.hp;
      me = apply_healing(std::move(me), heal.total);
      ev.healing = me.hp - before;
      ev.target = actor;
      break;
    }
    case ActionKind::kActionSurge: {
      EntityState& me = state.entity(actor);
      me.action_surge_uses -= 1;
      me.economy.actions += 1;
      me.economy.action_surged = true;
      break;
    }
  }

  prune_initiative(state);
  fill_after(state, ev);
  events.push_back(std::move(ev));
  return events;
}

Outcome is_terminal(const GameState& state) {
  bool hero_alive = false;
  bool enemy_alive = false;
  for (const EntityState& e : state.entities) {
    if (!e.alive()) continue;
    (e.team == Team::kHero ? hero_alive : enemy_alive) = true;
  }
  if (!hero_alive) return Outcome::kHeroLost;
  if (!enemy_alive) return Outcome::kHeroWon;
  if (state.round > state.max_rounds) return Outcome::kTie;
  return Outcome::kOngoing;
}

std::string describe_action(const GameState& state, const Action& a) {
  auto weapon_name = [&]() -> std::string {
    const EntityState& me = state.active();
    if (a.weapon_slot < 0 ||
        a.weapon_slot >= static_cast<int>(me.sheet->weapons.size())) {
      return "?";
    }
    return std::string(weapon(me.sheet->weapons[a.weapon_slot]).name);
  };
  switch (a.kind) {
    case ActionKind::kEndTurn: return "end my turn";
    case ActionKind::kMeleeAttack:
      return "attack enemy with melee weapon: " + weapon_name();
    case ActionKind::kRangedAttack:
      return "attack enemy with ranged weapon: " + weapon_name();
    case ActionKind::kTwoWeaponAttack:
      return "attack enemy with offhand weapon: " + weapon_name();
    case ActionKind::kCastSpell: {
      const std::string name(spell(*a.spell).name);
      if (a.target == state.active_id()) return "cast " + name + " on myself";
      return "cast " + name + " on enemy";
    }
    case ActionKind::kDash: return "dash action";
    case ActionKind::kDashBonus: return "dash as bonus action";
    case ActionKind::kDisengage: return "disengage action";
    // Menu wording kept as the reference prompt prints it.
    case ActionKind::kDisengageBonus: return "disengage as bonus action action";
    case ActionKind::kDodge: return "dodge action";
    case ActionKind::kProne: return "go prone";
    case ActionKind::kStand: return "stand up";
    case ActionKind::kSecondWind: return "use second wind";
    case ActionKind::kActionSurge: return "use action surge";
    case ActionKind::kMove:
      switch (*a.direction) {
        case Direction::kUpLeft: return "move 5ft up and to the left";
        case Direction::kLeft: return "move 5ft to the left";
        case Direction::kDownLeft: return "move 5ft down and to the left";
        case Direction::kUp: return "move 5ft up";
        case Direction::kDown: return "move 5ft down";
        case Direction::kUpRight: return "move 5ft up and to the right";
        case Direction::kRight: return "move 5ft to the right";
        case Direction::kDownRight: return "move 5ft down and to the right";
      }
  }
  return "?";
}

}  // namespace dndrl
