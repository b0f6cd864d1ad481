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

#include "dndrl/tournament.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dndrl/assets.h"
#include "dndrl/dqn.h"

namespace dndrl {

using nlohmann::json;

namespace {

constexpr std::uint64_t kSharedTag = 0x5348415245440000ULL;
constexpr std::uint64_t kClassStream = 2;
constexpr std::uint64_t kFightStream = 3;
constexpr std::uint64_t kPolicyStream = 5;

const char* kKinds[] = {"rules", "random", "inert", "dqn", "llm"};

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

PolicyRef PolicyRef::from_json(const json& j) {
  for (const auto& [key, value] : j.items()) {
    if (key != "id" && key != "kind" && key != "params") {
      throw std::invalid_argument("unknown roster key '" + key + "'");
    }
  }
  PolicyRef r;
  r.id = j.at("id").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  if (j.contains("params")) r.params = j.at("params");
  if (std::find(std::begin(kKinds), std::end(kKinds), r.kind) == std::end(kKinds)) {
    throw std::invalid_argument("agent '" + r.id + "': unknown kind '" + r.kind + "'");
  }
  if (r.id.empty()) throw std::invalid_argument("agent id must not be empty");
  return r;
}

json PolicyRef::to_json() const {
  return json{{"id", id}, {"kind", kind}, {"params", params}};
}

std::vector<PolicyRef> load_roster(const json& j) {
  const json& agents = j.is_object() ? j.at("agents") : j;
  if (!agents.is_array()) throw std::invalid_argument("roster must list agents");
  std::vector<PolicyRef> out;
  std::set<std::string> seen;
  for (const json& a : agents) {
    PolicyRef r = PolicyRef::from_json(a);
    if (!seen.insert(r.id).second) {
      throw std::invalid_argument("duplicate agent id '" + r.id + "'");
    }
    out.push_back(std::move(r));
  }
  if (out.size() < 2) throw std::invalid_argument("roster needs at least two agents");
  return out;
}

std::vector<PolicyRef> load_roster_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open roster " + path.string());
  return load_roster(json::parse(in));
}

std::shared_ptr<Policy> make_policy(const PolicyRef& ref,
                                    const PolicyContext& ctx) {
  if (ref.kind == "rules") return std::make_shared<RulesPolicy>();
  if (ref.kind == "random") return std::make_shared<RandomPolicy>();
  if (ref.kind == "inert") return std::make_shared<InertPolicy>();
  if (ref.kind == "dqn") {
    const double eps = ref.params.value("epsilon", 0.0);
    std::shared_ptr<const Net> net;
    if (ref.params.contains("checkpoint")) {
      std::filesystem::path p = ref.params.at("checkpoint").get<std::string>();
      if (p.is_relative() && !ctx.base_dir.empty()) p = ctx.base_dir / p;
      net = std::make_shared<const Net>(network_from(load_checkpoint(p)));
    } else if (ref.params.contains("init_seed")) {
      net = std::make_shared<const Net>(
          initial_network(ref.params.at("init_seed").get<std::uint64_t>()));
    } else {
      throw std::invalid_argument("dqn agent '" + ref.id +
                                  "' needs a checkpoint or init_seed");
    }
    return std::make_shared<DqnPolicy>(net, ref.id, eps);
  }
  if (ref.kind == "llm") {
    const auto endpoint =
        llm::EndpointConfig::from_json(ref.params.value("endpoint", json::object()));
    llm::RoutingPolicy routing;
    routing.primary_model = ref.params.value("primary_model", routing.primary_model);
    routing.secondary_model = ref.params.value("secondary_model", std::string());
    auto client = std::make_shared<const llm::ChatClient>(endpoint);
    return std::make_shared<llm::LlmPolicy>(client, routing, ctx.telemetry, ref.id);
  }
  throw std::invalid_argument("unknown policy kind '" + ref.kind + "'");
}

std::string MatchResult::cell() const {
  return std::to_string(wins) + "/" + std::to_string(losses) + "/" +
         std::to_string(ties);
}

FightSpec fight_spec(const TournamentConfig& config, int first, int second,
                     int k) {
  const auto& pool =
      config.map_pool.empty() ? default_map_pool() : config.map_pool;
  std::uint64_t pair_seed;
  if (config.shared_seeds) {
    pair_seed = derive_seed(config.seed ^ kSharedTag,
                            static_cast<std::uint64_t>(std::min(first, second)),
                            static_cast<std::uint64_t>(std::max(first, second)));
  } else {
    pair_seed = derive_seed(config.seed, static_cast<std::uint64_t>(first),
                            static_cast<std::uint64_t>(second));
  }
  FightSpec spec;
  spec.seed = derive_seed(pair_seed, static_cast<std::uint64_t>(k), 0);
  spec.setup.map = pool[static_cast<size_t>(k) % pool.size()];
  spec.map_name = spec.setup.map->name();
  RngStream class_rng(derive_seed(spec.seed, kClassStream, 0));
  for (int side = 0; side < 2; ++side) {
    CharacterClass c = CharacterClass::kFighter;
    if (config.class_mode == ClassMode::kFourClasses) {
      c = kClasses[class_rng.uniform_int(0, 3)];
    }
    spec.setup.sheets[side] = config.sheets[side] ? config.sheets[side] : bundled_sheet(c);
  }
  spec.setup.seed = derive_seed(spec.seed, kFightStream, 0);
  spec.setup.max_rounds = config.max_rounds;
  return spec;
}

FightOutcome play_fight(const FightSetup& setup,
                        const std::array<Policy*, 2>& policies,
                        std::uint64_t policy_seed, FightLog* log) {
  GameState st = new_fight(setup);
  RngStream rng[2] = {RngStream(derive_seed(policy_seed, kPolicyStream, 0)),
                      RngStream(derive_seed(policy_seed, kPolicyStream, 1))};
  FightOutcome out;
  while (is_terminal(st) == Outcome::kOngoing) {
    const int side = st.active().team == Team::kHero ? 0 : 1;
    std::vector<CombatEvent> events;
    try {
      const Action a = policies[side]->choose(st, rng[side]);
      events = apply_action(st, a);
    } catch (const std::exception& e) {
      out.failed_side = side;
      out.error = policies[side]->name() + ": " + e.what();
      break;
    }
    if (log) {
      for (CombatEvent& e : events) log->events.push_back(std::move(e));
    }
  }
  out.outcome = is_terminal(st);
  out.rounds = std::min(st.round, st.max_rounds);
  if (log) finish_log(*log, st);
  return out;
}

namespace {

struct Task {
  int a;
  int b;
  int k;
};

FightRecord run_one(const TournamentConfig& config,
                    const std::vector<PolicyRef>& roster,
                    const std::vector<std::shared_ptr<Policy>>& policies,
                    const std::vector<std::string>& init_errors, const Task& t) {
  const FightSpec spec = fight_spec(config, t.a, t.b, t.k);
  // Shared seeds keep the lower roster index on the hero side.
  const bool swapped = config.shared_seeds && t.a > t.b;
  const int side0 = swapped ? t.b : t.a;
  const int side1 = swapped ? t.a : t.b;

  FightRecord rec;
  rec.index = t.k;
  rec.seed = spec.seed;
  rec.map = spec.map_name;
  rec.classes = std::string(class_key(spec.setup.sheets[0]->character_class)) +
                "-" + std::string(class_key(spec.setup.sheets[1]->character_class));

  FightOutcome fo;
  if (!init_errors[side0].empty() || !init_errors[side1].empty()) {
    fo.failed_side = init_errors[side0].empty() ? 1 : 0;
    fo.error = roster[fo.failed_side == 0 ? side0 : side1].id + ": " +
               init_errors[fo.failed_side == 0 ? side0 : side1];
  } else {
    FightLog log;
    FightLog* logp = nullptr;
    if (!config.log_dir.empty()) {
      log = start_log(spec.setup, {roster[side0].id, roster[side1].id});
      logp = &log;
    }
    fo = play_fight(spec.setup, {policies[side0].get(), policies[side1].get()},
                    spec.seed, logp);
    if (logp) {
      write_log_file(log, config.log_dir / (roster[t.a].id + "__" +
                                            roster[t.b].id + "__" +
                                            std::to_string(t.k) + ".jsonl"));
    }
  }
  rec.rounds = fo.rounds;
  // Result from side 0's perspective, then flipped if t.a sits on side 1.
  FightResult r;
  if (fo.failed_side >= 0) {
    rec.error = true;
    rec.error_message = fo.error;
    r = fo.failed_side == 0 ? FightResult::kLoss : FightResult::kWin;
  } else if (fo.outcome == Outcome::kHeroWon) {
    r = FightResult::kWin;
  } else if (fo.outcome == Outcome::kHeroLost) {
    r = FightResult::kLoss;
  } else {
    r = FightResult::kTie;
  }
  if (swapped && r != FightResult::kTie) {
    r = r == FightResult::kWin ? FightResult::kLoss : FightResult::kWin;
  }
  rec.result = r;
  return rec;
}

void tally(MatchResult& m) {
  m.wins = m.losses = m.ties = 0;
  for (const FightRecord& f : m.fights) {
    switch (f.result) {
      case FightResult::kWin: ++m.wins; break;
      case FightResult::kLoss: ++m.losses; break;
      case FightResult::kTie: ++m.ties; break;
    }
  }
}

TournamentResult run_tasks(const std::vector<PolicyRef>& roster,
                           const std::vector<std::pair<int, int>>& pairs,
                           const TournamentConfig& config,
                           const PolicyContext& ctx) {
  if (config.fights_per_pair < 1) throw std::invalid_argument("fights must be >= 1");
  const int n = static_cast<int>(roster.size());
  std::vector<std::shared_ptr<Policy>> policies(n);
  std::vector<std::string> init_errors(n);
  for (int i = 0; i < n; ++i) {
    try {
      policies[i] = make_policy(roster[i], ctx);
    } catch (const std::exception& e) {
      init_errors[i] = e.what();
      std::fprintf(stderr, "agent '%s' failed to initialize: %s\n",
                   roster[i].id.c_str(), e.what());
    }
  }
  if (!config.log_dir.empty()) std::filesystem::create_directories(config.log_dir);

  std::vector<Task> tasks;
  for (const auto& [a, b] : pairs) {
    for (int k = 0; k < config.fights_per_pair; ++k) tasks.push_back({a, b, k});
  }
  std::vector<FightRecord> records(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      records[i] = run_one(config, roster, policies, init_errors, tasks[i]);
    }
  };
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  TournamentResult result;
  for (const PolicyRef& r : roster) result.agents.push_back(r.id);
  result.cells.assign(n, std::vector<MatchResult>(n));
  for (size_t i = 0; i < tasks.size(); ++i) {
    MatchResult& m = result.cells[tasks[i].a][tasks[i].b];
    m.agent_a = roster[tasks[i].a].id;
    m.agent_b = roster[tasks[i].b].id;
    m.fights.push_back(records[i]);
  }
  for (auto& row : result.cells) {
    for (auto& m : row) tally(m);
  }
  for (const FightRecord& f : records) {
    if (f.error) std::fprintf(stderr, "forfeit: %s\n", f.error_message.c_str());
  }
  return result;
}

}  // namespace

TournamentResult round_robin(const std::vector<PolicyRef>& roster,
                             const TournamentConfig& config,
                             const PolicyContext& ctx) {
  std::set<std::string> ids;
  for (const PolicyRef& r : roster) {
    if (!ids.insert(r.id).second) {
      throw std::invalid_argument("duplicate agent id '" + r.id + "'");
    }
  }
  if (roster.size() < 2) throw std::invalid_argument("roster needs at least two agents");
  std::vector<std::pair<int, int>> pairs;
  const int n = static_cast<int>(roster.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  return run_tasks(roster, pairs, config, ctx);
}

MatchResult run_match(const PolicyRef& a, const PolicyRef& b,
                      const TournamentConfig& config, const PolicyContext& ctx) {
  if (a.id == b.id) throw std::invalid_argument("run_match needs distinct ids");
  TournamentResult t = run_tasks({a, b}, {{0, 1}}, config, ctx);
  return t.cells[0][1];
}

std::vector<LeaderboardRow> leaderboard(const TournamentResult& t) {
  std::vector<LeaderboardRow> rows;
  for (size_t a = 0; a < t.agents.size(); ++a) {
    LeaderboardRow row;
    row.agent = t.agents[a];
    long rounds = 0;
    long fights = 0;
    for (size_t b = 0; b < t.agents.size(); ++b) {
      if (a == b) continue;
      const MatchResult& m = t.cells[a][b];
      row.wins += m.wins;
      row.losses += m.losses;
      row.ties += m.ties;
      for (const FightRecord& f : m.fights) rounds += f.rounds;
      fights += static_cast<long>(m.fights.size());
    }
    row.avg_rounds = fights ? static_cast<double>(rounds) / fights : 0.0;
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const LeaderboardRow& x, const LeaderboardRow& y) {
                     if (x.wins != y.wins) return x.wins > y.wins;
                     return x.losses < y.losses;
                   });
  return rows;
}

std::string matrix_csv(const TournamentResult& t) {
  std::ostringstream out;
  out << "agent";
  for (const auto& id : t.agents) out << ',' << id;
  out << '\n';
  for (size_t a = 0; a < t.agents.size(); ++a) {
    out << t.agents[a];
    for (size_t b = 0; b < t.agents.size(); ++b) {
      out << ',';
      if (a != b) out << t.cells[a][b].cell();
    }
    out << '\n';
  }
  return out.str();
}

std::string matrix_text(const TournamentResult& t) {
  size_t w = 5;
  for (const auto& id : t.agents) w = std::max(w, id.size());
  for (const auto& row : t.cells) {
    for (const auto& m : row) w = std::max(w, m.cell().size());
  }
  w += 2;
  std::ostringstream out;
  out << pad("", w);
  for (const auto& id : t.agents) out << pad(id, w);
  out << '\n';
  for (size_t a = 0; a < t.agents.size(); ++a) {
    out << pad(t.agents[a], w);
    for (size_t b = 0; b < t.agents.size(); ++b) {
      out << pad(a == b ? "-" : t.cells[a][b].cell(), w);
    }
    out << '\n';
  }
  return out.str();
}

std::string leaderboard_csv(const std::vector<LeaderboardRow>& rows) {
  std::ostringstream out;
  out << "agent,wins,losses,ties,avg_rounds\n";
  for (const auto& r : rows) {
    out << r.agent << ',' << r.wins << ',' << r.losses << ',' << r.ties << ','
        << format_fixed(r.avg_rounds, 2) << '\n';
  }
  return out.str();
}

std::string leaderboard_text(const std::vector<LeaderboardRow>& rows) {
  size_t w = 6;
  for (const auto& r : rows) w = std::max(w, r.agent.size());
  w += 2;
  std::ostringstream out;
  out << pad("Agent", w) << pad("Wins", 8) << pad("Losses", 8) << pad("Ties", 8)
      << "AVG Rounds\n";
  for (const auto& r : rows) {
    out << pad(r.agent, w) << pad(std::to_string(r.wins), 8)
        << pad(std::to_string(r.losses), 8) << pad(std::to_string(r.ties), 8)
        << format_fixed(r.avg_rounds, 2) << '\n';
  }
  return out.str();
}

std::string fights_csv(const TournamentResult& t) {
  std::ostringstream out;
  out << "agent_a,agent_b,fight,seed,map,classes,result,rounds,error\n";
  for (size_t a = 0; a < t.agents.size(); ++a) {
    for (size_t b = 0; b < t.agents.size(); ++b) {
      if (a == b) continue;
      for (const FightRecord& f : t.cells[a][b].fights) {
        const char* res = f.result == FightResult::kWin    ? "win"
                          : f.result == FightResult::kLoss ? "loss"
                                                           : "tie";
        std::string err = f.error_message;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        out << t.agents[a] << ',' << t.agents[b] << ',' << f.index << ','
            << f.seed << ',' << f.map << ',' << f.classes << ',' << res << ','
            << f.rounds << ',' << err << '\n';
      }
    }
  }
  return out.str();
}

void write_tournament_outputs(const TournamentResult& t,
                              const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << text;
  };
  const auto rows = leaderboard(t);
  write("matrix.csv", matrix_csv(t));
  write("matrix.txt", matrix_text(t));
  write("leaderboard.csv", leaderboard_csv(rows));
  write("leaderboard.txt", leaderboard_text(rows));
  write("fights.csv", fights_csv(t));
}

}  // namespace dndrl
