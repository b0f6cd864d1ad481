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

// Deep Q-learning over enumerated action menus: replay buffer,
// epsilon-greedy selection, TD targets, training loop and checkpoints.

#ifndef DNDRL_DQN_H_
#define DNDRL_DQN_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dndrl/adversaries.h"
#include "dndrl/env.h"
#include "dndrl/nn.h"
#include "json.hpp"

namespace dndrl {

using Net = QNetwork<double>;

struct Transition {
  Observation obs;
  ActionEncoding action;
  double reward = 0;
  Observation next;  // next.legal holds the next menu; empty when done
  bool done = false;
};

class ReplayBuffer {
 public:
  explicit ReplayBuffer(size_t capacity);
  // Overwrites the oldest entry once full.
  void push(Transition t);
  size_t size() const { return items_.size(); }
  size_t capacity() const { return capacity_; }
  // Oldest first.
  const Transition& at(size_t i) const;
  // `n` distinct entries, uniformly. Throws if size() < n.
  std::vector<const Transition*> sample(size_t n, RngStream& rng) const;

 private:
  size_t capacity_;
  size_t head_ = 0;  // next slot to overwrite when full
  std::vector<Transition> items_;
};

// Linear from `start` to `final` over `decay_frames`, then flat.
double epsilon_at(long frame, double start = 1.0, double final = 0.01,
                  long decay_frames = 1000);

// Uniform legal index with probability epsilon, else argmax Q with ties to the
// lowest index. obs.legal must be nonempty.
int select_action(const Net& net, const Observation& obs, double epsilon,
                  RngStream& rng);

// r if done, else r + gamma * max over next legal actions of target Q.
std::vector<double> td_targets(const std::vector<const Transition*>& batch,
                               const Net& target, double gamma);

// Mean squared TD error and its gradient with respect to `net`'s parameters
// (targets held fixed).
double loss_gradient(const Net& net, const Net& target,
                     const std::vector<const Transition*>& batch, double gamma,
                     Net::Vec& grad);

// One Adam step on the mean squared TD error; returns the loss before the
// step.
double train_step(Net& net, const Net& target, Adam<double>& opt,
                  const std::vector<const Transition*>& batch, double gamma);

// Mean squared TD error without changing anything.
double batch_loss(const Net& net, const Net& target,
                  const std::vector<const Transition*>& batch, double gamma);

struct TrainConfig {
  int iterations = 1000;
  int horizon = 1024;            // env steps collected per iteration
  int batch_size = 64;
  int train_steps_per_iteration = 2;
  double learning_rate = 1e-3;
  double gamma = 0.99;
  double epsilon_start = 1.0;
  double epsilon_final = 0.01;
  long epsilon_decay_frames = 1000;
  int buffer_capacity = 3000;
  int target_update = 1;         // iterations between target copies
  std::uint64_t seed = 0;
  ClassMode class_mode = ClassMode::kFighterOnly;
  int max_rounds = kDefaultMaxRounds;
  // Fixed hero / enemy sheets (not serialized); null follows class_mode.
  std::array<std::shared_ptr<const CharacterSheet>, 2> sheets;

  nlohmann::json to_json() const;
  static TrainConfig from_json(const nlohmann::json& j);  // missing keys keep defaults
};

struct Checkpoint {
  static constexpr const char* kFormat = "dndrl-dqn-checkpoint";
  static constexpr int kVersion = 1;
  Net::Vec params;
  long frame = 0;
  int iteration = 0;
  TrainConfig config;
  std::vector<double> reward_curve;
};

void save_checkpoint(const Checkpoint& c, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);
Net network_from(const Checkpoint& c);

// Freshly initialized network for a training seed; train() starts here.
Net initial_network(std::uint64_t seed);

// Picks the adversary of the n-th training episode.
using AdversaryPicker = std::function<std::shared_ptr<Policy>(std::uint64_t)>;

struct TrainProgress {
  int iteration = 0;
  long frame = 0;
  double mean_reward = 0;
  int episodes = 0;
  double loss = 0;
};

struct TrainResult {
  Checkpoint checkpoint;
  long episodes = 0;
};

// Per iteration: collect `horizon` hero steps into the buffer, run
// `train_steps_per_iteration` updates once the buffer holds a batch, then copy
// the online network into the target network. reward_curve[i] is the mean
// reward of episodes finished during iteration i (the previous value, or 0,
// when none finished).
TrainResult train(const TrainConfig& config, const AdversaryPicker& adversary,
                  const std::function<void(const TrainProgress&)>& on_iteration = {});

// Greedy (or epsilon-greedy) player driven by a network.
class DqnPolicy : public Policy {
 public:
  DqnPolicy(std::shared_ptr<const Net> net, std::string name,
            double epsilon = 0.0);
  Action choose(const GameState& state, RngStream& rng) override;
  std::string name() const override { return name_; }

 private:
  std::shared_ptr<const Net> net_;
  std::string name_;
  double epsilon_;
};

}  // namespace dndrl

#endif  // DNDRL_DQN_H_
