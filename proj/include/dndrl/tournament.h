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

// Round-robin evaluation of a roster of policies.

#ifndef DNDRL_TOURNAMENT_H_
#define DNDRL_TOURNAMENT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dndrl/adversaries.h"
#include "dndrl/env.h"
#include "dndrl/event_log.h"
#include "dndrl/llm/llm_policy.h"
#include "json.hpp"

namespace dndrl {

// kind: rules | random | inert | dqn | llm.
//   dqn params:  {"checkpoint": path} or {"init_seed": n} for untrained
//                weights; optional "epsilon".
//   llm params:  {"endpoint": EndpointConfig, "primary_model": s,
//                 "secondary_model": s}
struct PolicyRef {
  std::string id;
  std::string kind;
  nlohmann::json params = nlohmann::json::object();

  static PolicyRef from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Throws std::invalid_argument on duplicate ids, unknown kinds or fewer
// than two agents.
std::vector<PolicyRef> load_roster(const nlohmann::json& j);
std::vector<PolicyRef> load_roster_file(const std::filesystem::path& path);

struct PolicyContext {
  std::shared_ptr<llm::Telemetry> telemetry;
  std::filesystem::path base_dir;  // relative checkpoint paths resolve here
};

// Throws on configuration problems (missing checkpoint, bad endpoint).
std::shared_ptr<Policy> make_policy(const PolicyRef& ref,
                                    const PolicyContext& ctx);

enum class FightResult { kWin, kLoss, kTie };  // from the first agent's side

struct FightRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string map;
  std::string classes;  // "fighter-fighter"
  FightResult result = FightResult::kTie;
  int rounds = 0;
  bool error = false;   // a policy failed; its side forfeits
  std::string error_message;
};

struct MatchResult {
  std::string agent_a;
  std::string agent_b;
  std::vector<FightRecord> fights;
  int wins = 0;
  int losses = 0;
  int ties = 0;
  std::string cell() const;  // "W/L/T"
};

struct TournamentConfig {
  int fights_per_pair = 30;
  std::uint64_t seed = 0;
  ClassMode class_mode = ClassMode::kFighterOnly;
  std::vector<std::shared_ptr<const BattleMap>> map_pool;  // empty: defaults
  int max_rounds = kDefaultMaxRounds;
  // Fixed sheets for the hero / enemy side; a null entry follows class_mode.
  std::array<std::shared_ptr<const CharacterSheet>, 2> sheets;
  // Cells (a, b) and (b, a) replay the same seeds with the agents on the
  // same sides, so the matrix is exactly antisymmetric.
  bool shared_seeds = false;
  int jobs = 1;
  std::filesystem::path log_dir;  // empty: keep no per-fight logs
};

struct FightSpec {
  FightSetup setup;
  std::uint64_t seed = 0;
  std::string map_name;
};

// Fight k of the pairing (first, second) in roster order. With shared seeds
// the seed depends on the unordered pair only.
FightSpec fight_spec(const TournamentConfig& config, int first, int second,
                     int k);

struct FightOutcome {
  Outcome outcome = Outcome::kOngoing;
  int rounds = 0;
  int failed_side = -1;
  std::string error;
};

// Plays one fight; side 0 is the hero. Exceptions thrown by a policy (or an
// illegal action it returns) end the fight as a forfeit of that side.
FightOutcome play_fight(const FightSetup& setup,
                        const std::array<Policy*, 2>& policies,
                        std::uint64_t policy_seed, FightLog* log = nullptr);

struct TournamentResult {
  std::vector<std::string> agents;
  // cells[a][b] for a != b; empty on the diagonal.
  std::vector<std::vector<MatchResult>> cells;
};

TournamentResult round_robin(const std::vector<PolicyRef>& roster,
                             const TournamentConfig& config,
                             const PolicyContext& ctx = {});

// Single ordered pairing.
MatchResult run_match(const PolicyRef& a, const PolicyRef& b,
                      const TournamentConfig& config,
                      const PolicyContext& ctx = {});

struct LeaderboardRow {
  std::string agent;
  int wins = 0;
  int losses = 0;
  int ties = 0;
  double avg_rounds = 0;
};

// One row per agent from its matrix row, sorted by wins (descending), then
// losses (ascending), then roster order.
std::vector<LeaderboardRow> leaderboard(const TournamentResult& t);

std::string matrix_csv(const TournamentResult& t);
std::string matrix_text(const TournamentResult& t);
std::string leaderboard_csv(const std::vector<LeaderboardRow>& rows);
std::string leaderboard_text(const std::vector<LeaderboardRow>& rows);
std::string fights_csv(const TournamentResult& t);

// matrix.{csv,txt}, leaderboard.{csv,txt}, fights.csv under `dir`.
void write_tournament_outputs(const TournamentResult& t,
                              const std::filesystem::path& dir);

}  // namespace dndrl

#endif  // DNDRL_TOURNAMENT_H_
