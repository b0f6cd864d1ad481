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

#include "dndrl/event_log.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace dndrl {

using nlohmann::json;

namespace {

constexpr const char* kDirectionNames[] = {
    "up_left", "left", "down_left", "up", "down", "up_right", "right",
    "down_right"};

struct Fnv {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void bytes(const void* p, size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 0x100000001b3ULL;
    }
  }
  void i64(std::int64_t v) { bytes(&v, sizeof(v)); }
  void u64(std::uint64_t v) { bytes(&v, sizeof(v)); }
};

json pos_json(Position p) { return json::array({p.x, p.y}); }
Position pos_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

}  // namespace

std::uint64_t state_hash(const GameState& s) {
  Fnv f;
  f.i64(s.round);
  f.i64(s.turn);
  f.i64(s.active_index);
  f.i64(s.max_rounds);
  for (int id : s.initiative) f.i64(id);
  for (const EntityState& e : s.entities) {
    f.i64(e.id);
    f.i64(static_cast<int>(e.team));
    f.i64(e.hp);
    f.i64(e.pos.x);
    f.i64(e.pos.y);
    f.i64(e.conditions.prone);
    f.i64(e.conditions.dodging);
    f.i64(e.conditions.dead);
    f.i64(e.conditions.shielded);
    const Economy& c = e.economy;
    f.i64(c.actions);
    f.i64(c.bonus_actions);
    f.i64(c.reactions);
    f.i64(c.movement_left);
    f.i64(c.disengaged);
    f.i64(c.action_surged);
    f.i64(c.attack_hit);
    f.i64(c.sneak_attack_used);
    f.i64(c.light_melee_slot);
    f.i64(e.second_wind_uses);
    f.i64(e.action_surge_uses);
    f.i64(e.spell_slots);
  }
  f.u64(s.rng.seed());
  f.u64(s.rng.position());
  return f.h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json action_to_json(const Action& a) {
  json j;
  j["kind"] = action_kind_name(a.kind);
  if (a.weapon_slot >= 0) j["weapon_slot"] = a.weapon_slot;
  if (a.spell) j["spell"] = std::string(spell(*a.spell).key);
  if (a.target >= 0) j["target"] = a.target;
  if (a.direction) j["direction"] = kDirectionNames[static_cast<int>(*a.direction)];
  return j;
}

Action action_from_json(const json& j) {
  Action a;
  const auto kind = parse_action_kind(j.at("kind").get<std::string>());
  if (!kind) throw LogError("unknown action kind: " + j.at("kind").dump());
  a.kind = *kind;
  a.weapon_slot = j.value("weapon_slot", -1);
  a.target = j.value("target", -1);
  if (j.contains("spell")) {
    a.spell = find_spell(j.at("spell").get<std::string>());
    if (!a.spell) throw LogError("unknown spell: " + j.at("spell").dump());
  }
  if (j.contains("direction")) {
    const std::string d = j.at("direction").get<std::string>();
    for (int i = 0; i < 8; ++i) {
      if (d == kDirectionNames[i]) a.direction = static_cast<Direction>(i);
    }
    if (!a.direction) throw LogError("unknown direction: " + d);
  }
  return a;
}

json event_to_json(const CombatEvent& e) {
  json rolls = json::array();
  for (const RollRecord& r : e.rolls) {
    rolls.push_back({{"label", r.label},
                     {"dice", r.dice},
                     {"modifier", r.modifier},
                     {"total", r.total}});
  }
  json after = json::array();
  for (const EntitySnapshot& s : e.after) {
    after.push_back({{"id", s.id}, {"hp", s.hp}, {"pos", pos_json(s.pos)}});
  }
  return json{{"type", "event"},
              {"round", e.round},
              {"turn", e.turn},
              {"actor", e.actor},
              {"action", action_to_json(e.action)},
              {"reaction", e.reaction},
              {"text", e.text},
              {"rolls", rolls},
              {"target", e.target},
              {"hit", e.hit},
              {"critical", e.critical},
              {"damage", e.damage},
              {"healing", e.healing},
              {"note", e.note},
              {"after", after}};
}

CombatEvent event_from_json(const json& j) {
  CombatEvent e;
  e.round = j.at("round").get<int>();
  e.turn = j.at("turn").get<int>();
  e.actor = j.at("actor").get<int>();
  e.action = action_from_json(j.at("action"));
  e.reaction = j.at("reaction").get<bool>();
  e.text = j.at("text").get<std::string>();
  for (const json& r : j.at("rolls")) {
    e.rolls.push_back(RollRecord{r.at("label").get<std::string>(),
                                 r.at("dice").get<std::vector<int>>(),
                                 r.at("modifier").get<int>(),
                                 r.at("total").get<int>()});
  }
  e.target = j.at("target").get<int>();
  e.hit = j.at("hit").get<bool>();
  e.critical = j.at("critical").get<bool>();
  e.damage = j.at("damage").get<int>();
  e.healing = j.at("healing").get<int>();
  e.note = j.at("note").get<std::string>();
  for (const json& s : j.at("after")) {
    e.after.push_back(
        {s.at("id").get<int>(), s.at("hp").get<int>(), pos_from(s.at("pos"))});
  }
  return e;
}

FightLog start_log(const FightSetup& setup, std::vector<std::string> labels) {
  FightLog log;
  log.map_name = setup.map->name();
  log.map_text = setup.map->to_text();
  for (const auto& sheet : setup.sheets) log.sheets.push_back(sheet_to_json(*sheet));
  log.labels = std::move(labels);
  log.seed = setup.seed;
  log.max_rounds = setup.max_rounds;
  return log;
}

void finish_log(FightLog& log, const GameState& final_state) {
  log.complete = true;
  log.outcome = is_terminal(final_state);
  log.rounds = final_state.round;
  log.final_hash = state_hash(final_state);
}

void write_log(const FightLog& log, std::ostream& out) {
  json header{{"type", "header"},
              {"version", kLogVersion},
              {"map_name", log.map_name},
              {"map", log.map_text},
              {"sheets", log.sheets},
              {"labels", log.labels},
              {"seed", log.seed},
              {"max_rounds", log.max_rounds}};
  out << header.dump() << '\n';
  for (const CombatEvent& e : log.events) out << event_to_json(e).dump() << '\n';
  if (log.complete) {
    json footer{{"type", "footer"},
                {"outcome", outcome_name(log.outcome)},
                {"rounds", log.rounds},
                {"state_hash", hash_hex(log.final_hash)}};
    out << footer.dump() << '\n';
  }
}

void write_log_file(const FightLog& log, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw LogError("cannot write " + path.string());
  write_log(log, out);
}

FightLog read_log(std::istream& in) {
  FightLog log;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (log.complete) throw LogError("records after footer at line " + std::to_string(lineno));
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& ex) {
      throw LogError("line " + std::to_string(lineno) + ": " + ex.what());
    }
    try {
      const std::string type = j.at("type").get<std::string>();
      if (!have_header) {
        if (type != "header") throw LogError("first record is not a header");
        if (j.at("version").get<int>() != kLogVersion) {
          throw LogError("unsupported log version");
        }
        log.map_name = j.at("map_name").get<std::string>();
        log.map_text = j.at("map").get<std::string>();
        log.sheets = j.at("sheets").get<std::vector<json>>();
        log.labels = j.value("labels", std::vector<std::string>{});
        log.seed = j.at("seed").get<std::uint64_t>();
        log.max_rounds = j.at("max_rounds").get<int>();
        have_header = true;
      } else if (type == "event") {
        log.events.push_back(event_from_json(j));
      } else if (type == "footer") {
        const std::string outcome = j.at("outcome").get<std::string>();
        bool found = false;
        for (Outcome o : {Outcome::kOngoing, Outcome::kHeroWon,
                          Outcome::kHeroLost, Outcome::kTie}) {
          if (outcome == outcome_name(o)) {
            log.outcome = o;
            found = true;
          }
        }
        if (!found) throw LogError("unknown outcome " + outcome);
        log.rounds = j.at("rounds").get<int>();
        log.final_hash =
            std::stoull(j.at("state_hash").get<std::string>(), nullptr, 16);
        log.complete = true;
      } else {
        throw LogError("unknown record type " + type);
      }
    } catch (const json::exception& ex) {
      throw LogError("line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  if (!have_header) throw LogError("empty log");
  if (!log.complete) throw LogError("truncated log: no footer record");
  return log;
}

FightLog read_log_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LogError("cannot open " + path.string());
  return read_log(in);
}

FightSetup setup_from_log(const FightLog& log) {
  if (log.sheets.size() != 2) throw LogError("log must carry two sheets");
  FightSetup setup;
  setup.map = std::make_shared<BattleMap>(load_map(log.map_text, log.map_name));
  for (int i = 0; i < 2; ++i) {
    setup.sheets[i] = std::make_shared<CharacterSheet>(load_sheet(log.sheets[i]));
  }
  setup.seed = log.seed;
  setup.max_rounds = log.max_rounds;
  return setup;
}

ReplayResult replay(const FightLog& log, const ReplayObserver& on_decision) {
  ReplayResult r{new_fight(setup_from_log(log)), {}, 0};
  for (size_t i = 0; i < log.events.size(); ++i) {
    const CombatEvent& logged = log.events[i];
    if (logged.reaction) continue;
    std::vector<CombatEvent> produced;
    try {
      produced = apply_action(r.final_state, logged.action);
    } catch (const IllegalActionError& ex) {
      throw LogError("event " + std::to_string(i) + " no longer legal: " + ex.what());
    }
    if (on_decision) on_decision(r.final_state, produced);
    for (CombatEvent& e : produced) r.events.push_back(std::move(e));
  }
  if (r.events.size() != log.events.size()) {
    throw LogError("replay produced " + std::to_string(r.events.size()) +
                   " events, log has " + std::to_string(log.events.size()));
  }
  for (size_t i = 0; i < r.events.size(); ++i) {
    if (!(r.events[i] == log.events[i])) {
      throw LogError("replay diverges at event " + std::to_string(i));
    }
  }
  r.hash = state_hash(r.final_state);
  if (r.hash != log.final_hash) {
    throw LogError("final state hash mismatch: log " + hash_hex(log.final_hash) +
                   ", replay " + hash_hex(r.hash));
  }
  if (is_terminal(r.final_state) != log.outcome) {
    throw LogError("outcome mismatch");
  }
  return r;
}

}  // namespace dndrl
