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

#include "dndrl/env.h"

#include <stdexcept>
#include <string>

#include "dndrl/assets.h"

namespace dndrl {

namespace {

// Stream ids for derive_seed.
constexpr std::uint64_t kMapStream = 1;
constexpr std::uint64_t kClassStream = 2;
constexpr std::uint64_t kFightStream = 3;
constexpr std::uint64_t kAdversaryStream = 4;

}  // namespace

double compute_reward(Outcome outcome, const EntityState& adversary) {
  switch (outcome) {
    case Outcome::kHeroWon: return kWinReward;
    case Outcome::kHeroLost:
      return -kWinReward * adversary.hp / adversary.max_hp();
    case Outcome::kTie:
    case Outcome::kOngoing:
      return 0.0;
  }
  return 0.0;
}

const char* class_mode_name(ClassMode m) {
  return m == ClassMode::kFighterOnly ? "fighter" : "four";
}

ClassMode parse_class_mode(std::string_view s) {
  if (s == "fighter" || s == "fighter_only") return ClassMode::kFighterOnly;
  if (s == "four" || s == "four_classes") return ClassMode::kFourClasses;
  throw std::invalid_argument("unknown class mode '" + std::string(s) +
                              "' (expected fighter or four)");
}

FightSetup sample_episode(const EpisodeConfig& config, std::uint64_t seed) {
  const auto& pool =
      config.map_pool.empty() ? default_map_pool() : config.map_pool;
  RngStream map_rng(derive_seed(seed, kMapStream, 0));
  RngStream class_rng(derive_seed(seed, kClassStream, 0));
  FightSetup setup;
  setup.map = pool[map_rng.uniform_int(0, static_cast<int>(pool.size()) - 1)];
  for (int side = 0; side < 2; ++side) {
    CharacterClass c = CharacterClass::kFighter;
    if (config.class_mode == ClassMode::kFourClasses) {
      c = kClasses[class_rng.uniform_int(0, 3)];
    }
    setup.sheets[side] = config.sheets[side] ? config.sheets[side] : bundled_sheet(c);
  }
  setup.seed = derive_seed(seed, kFightStream, 0);
  setup.max_rounds = config.max_rounds;
  return setup;
}

CombatEnv::CombatEnv(EpisodeConfig config, std::shared_ptr<Policy> adversary)
    : config_(std::move(config)), adversary_(std::move(adversary)) {
  if (!adversary_) throw std::invalid_argument("CombatEnv: null adversary");
}

void CombatEnv::set_adversary(std::shared_ptr<Policy> adversary) {
  if (!adversary) throw std::invalid_argument("CombatEnv: null adversary");
  adversary_ = std::move(adversary);
}

Observation CombatEnv::reset(std::uint64_t episode_seed) {
  const FightSetup setup = sample_episode(config_, episode_seed);
  state_ = new_fight(setup);
  adversary_rng_ = RngStream(derive_seed(episode_seed, kAdversaryStream, 0));
  adversary_->reset();
  log_ = start_log(setup, {"hero", adversary_->name()});
  done_ = false;
  run_adversary();
  refresh();
  return obs_;
}

std::vector<CombatEvent> CombatEnv::run_adversary() {
  std::vector<CombatEvent> events;
  while (is_terminal(state_) == Outcome::kOngoing &&
         state_.active().team != Team::kHero) {
    const Action a = adversary_->choose(state_, adversary_rng_);
    for (CombatEvent& e : apply_action(state_, a)) {
      if (config_.record_log) log_.events.push_back(e);
      events.push_back(std::move(e));
    }
  }
  return events;
}

void CombatEnv::refresh() {
  done_ = is_terminal(state_) != Outcome::kOngoing;
  if (done_) {
    legal_.clear();
    finish_log(log_, state_);
  } else {
    legal_ = enumerate_actions(state_);
  }
  obs_ = encode_observation(state_, hero_id());
}

double CombatEnv::final_reward() const {
  return compute_reward(is_terminal(state_), state_.entity(adversary_id()));
}

StepResult CombatEnv::step(int action_index) {
  if (done_) throw std::logic_error("step() called on a finished episode");
  if (action_index < 0 || action_index >= static_cast<int>(legal_.size())) {
    throw std::out_of_range("action index " + std::to_string(action_index) +
                            " outside menu of " + std::to_string(legal_.size()));
  }
  StepResult r;
  for (CombatEvent& e : apply_action(state_, legal_[action_index])) {
    if (config_.record_log) log_.events.push_back(e);
    r.events.push_back(std::move(e));
  }
  for (CombatEvent& e : run_adversary()) r.events.push_back(std::move(e));
  refresh();
  r.observation = obs_;
  r.done = done_;
  r.outcome = is_terminal(state_);
  r.reward = done_ ? final_reward() : 0.0;
  return r;
}

}  // namespace dndrl
