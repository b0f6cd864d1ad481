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

// Single-agent environment around one hero. Adversary turns run inside
// step(), so every observation returned belongs to the hero's turn.

#ifndef DNDRL_ENV_H_
#define DNDRL_ENV_H_

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "dndrl/adversaries.h"
#include "dndrl/event_log.h"
#include "dndrl/observation.h"

namespace dndrl {

inline constexpr double kWinReward = 10.0;

// +10 for a win, 0 for a tie or an ongoing fight, and
// -10 * adversary hp / adversary max hp for a loss.
double compute_reward(Outcome outcome, const EntityState& adversary);

enum class ClassMode { kFighterOnly, kFourClasses };
const char* class_mode_name(ClassMode m);
ClassMode parse_class_mode(std::string_view s);  // "fighter" or "four"

struct EpisodeConfig {
  ClassMode class_mode = ClassMode::kFighterOnly;
  std::vector<std::shared_ptr<const BattleMap>> map_pool;  // empty: defaults
  std::uint64_t seed = 0;
  int max_rounds = kDefaultMaxRounds;
  bool record_log = true;  // keep a FightLog of every episode
  // Fixed hero / enemy sheets; a null entry follows class_mode.
  std::array<std::shared_ptr<const CharacterSheet>, 2> sheets;
};

struct StepResult {
  Observation observation;
  double reward = 0;
  bool done = false;
  Outcome outcome = Outcome::kOngoing;
  std::vector<CombatEvent> events;  // hero action plus adversary turns
};

// Derives the map, classes and fight seed of an episode.
FightSetup sample_episode(const EpisodeConfig& config, std::uint64_t episode_seed);

class CombatEnv {
 public:
  CombatEnv(EpisodeConfig config, std::shared_ptr<Policy> adversary);

  // Starts episode `episode_seed`; the adversary acts first when it wins
  // initiative. The episode can already be over if the hero died then.
  Observation reset(std::uint64_t episode_seed);
  // Throws std::out_of_range for a bad index and std::logic_error after done.
  StepResult step(int action_index);

  void set_adversary(std::shared_ptr<Policy> adversary);
  const Policy& adversary() const { return *adversary_; }
  const GameState& state() const { return state_; }
  const std::vector<Action>& legal_actions() const { return legal_; }
  bool done() const { return done_; }
  Outcome outcome() const { return is_terminal(state_); }
  // Reward of the finished episode (valid when done()).
  double final_reward() const;
  const FightLog& log() const { return log_; }
  int hero_id() const { return 0; }
  int adversary_id() const { return 1; }

 private:
  std::vector<CombatEvent> run_adversary();
  void refresh();

  EpisodeConfig config_;
  std::shared_ptr<Policy> adversary_;
  GameState state_;
  RngStream adversary_rng_;
  std::vector<Action> legal_;
  Observation obs_;
  FightLog log_;
  bool done_ = true;
};

}  // namespace dndrl

#endif  // DNDRL_ENV_H_
