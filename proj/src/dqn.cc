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

#include "dndrl/dqn.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace dndrl {

using nlohmann::json;

namespace {

constexpr std::uint64_t kInitStream = 0x494e4954;
constexpr std::uint64_t kEpisodeStream = 0x45504953;
constexpr std::uint64_t kActStream = 0x41435420;
constexpr std::uint64_t kSampleStream = 0x53414d50;

}  // namespace

ReplayBuffer::ReplayBuffer(size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("replay capacity must be > 0");
  items_.reserve(capacity);
}

void ReplayBuffer::push(Transition t) {
  if (items_.size() < capacity_) {
    items_.push_back(std::move(t));
    return;
  }
  items_[head_] = std::move(t);
  head_ = (head_ + 1) % capacity_;
}

const Transition& ReplayBuffer::at(size_t i) const {
  if (i >= items_.size()) throw std::out_of_range("replay index");
  return items_[(head_ + i) % items_.size()];
}

std::vector<const Transition*> ReplayBuffer::sample(size_t n,
                                                    RngStream& rng) const {
  if (n > items_.size()) throw std::invalid_argument("replay buffer too small");
  std::vector<size_t> idx(items_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<const Transition*> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const size_t j = i + static_cast<size_t>(rng.uniform_int(
                             0, static_cast<int>(idx.size() - i) - 1));
    std::swap(idx[i], idx[j]);
    out.push_back(&items_[idx[i]]);
  }
  return out;
}

double epsilon_at(long frame, double start, double final, long decay_frames) {
  if (frame < 0) throw std::invalid_argument("frame must be >= 0");
  if (decay_frames <= 0 || frame >= decay_frames) return final;
  const double e = start - (start - final) * static_cast<double>(frame) /
                               static_cast<double>(decay_frames);
  return std::max(final, e);
}

int select_action(const Net& net, const Observation& obs, double epsilon,
                  RngStream& rng) {
  const int n = static_cast<int>(obs.legal.size());
  if (n == 0) throw std::invalid_argument("select_action: no legal actions");
  if (epsilon > 0 && rng.uniform01() < epsilon) return rng.uniform_int(0, n - 1);
  const auto q = net.q_all(obs);
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (q[i] > q[best]) best = i;
  }
  return best;
}

std::vector<double> td_targets(const std::vector<const Transition*>& batch,
                               const Net& target, double gamma) {
  std::vector<double> y;
  y.reserve(batch.size());
  for (const Transition* t : batch) {
    if (t->done || t->next.legal.empty()) {
      y.push_back(t->reward);
      continue;
    }
    const auto q = target.q_all(t->next);
    y.push_back(t->reward + gamma * *std::max_element(q.begin(), q.end()));
  }
  return y;
}

double batch_loss(const Net& net, const Net& target,
                  const std::vector<const Transition*>& batch, double gamma) {
  const auto y = td_targets(batch, target, gamma);
  double loss = 0;
  for (size_t i = 0; i < batch.size(); ++i) {
    const double d = net.q_value(batch[i]->obs, batch[i]->action) - y[i];
    loss += d * d;
  }
  return loss / static_cast<double>(batch.size());
}

double loss_gradient(const Net& net, const Net& target,
                     const std::vector<const Transition*>& batch, double gamma,
                     Net::Vec& grad) {
  if (batch.empty()) throw std::invalid_argument("empty batch");
  const auto y = td_targets(batch, target, gamma);
  const double inv_b = 1.0 / static_cast<double>(batch.size());
  grad = Net::Vec::Zero(Net::num_params());
  double loss = 0;
  for (size_t i = 0; i < batch.size(); ++i) {
    // d/dq of (q - y)^2 / B, evaluated at the current q.
    const double q = net.q_value(batch[i]->obs, batch[i]->action);
    const double d = q - y[i];
    loss += d * d;
    net.accumulate_gradient(batch[i]->obs, batch[i]->action, 2 * d * inv_b,
                            grad);
  }
  return loss * inv_b;
}

double train_step(Net& net, const Net& target, Adam<double>& opt,
                  const std::vector<const Transition*>& batch, double gamma) {
  Net::Vec grad;
  const double loss = loss_gradient(net, target, batch, gamma, grad);
  opt.step(net.mutable_params(), grad);
  net.sync();
  return loss;
}

json TrainConfig::to_json() const {
  return json{{"iterations", iterations},
              {"horizon", horizon},
              {"batch_size", batch_size},
              {"train_steps_per_iteration", train_steps_per_iteration},
              {"learning_rate", learning_rate},
              {"gamma", gamma},
              {"epsilon_start", epsilon_start},
              {"epsilon_final", epsilon_final},
              {"epsilon_decay_frames", epsilon_decay_frames},
              {"buffer_capacity", buffer_capacity},
              {"target_update", target_update},
              {"seed", seed},
              {"classes", class_mode_name(class_mode)},
              {"max_rounds", max_rounds}};
}

TrainConfig TrainConfig::from_json(const json& j) {
  static const char* kKeys[] = {
      "iterations",    "horizon",       "batch_size",
      "train_steps_per_iteration",      "learning_rate",
      "gamma",         "epsilon_start", "epsilon_final",
      "epsilon_decay_frames",           "buffer_capacity",
      "target_update", "seed",          "classes",
      "max_rounds"};
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char* k) {
          return key == k;
        }) == std::end(kKeys)) {
      throw std::invalid_argument("unknown training config key '" + key + "'");
    }
  }
  TrainConfig c;
  c.iterations = j.value("iterations", c.iterations);
  c.horizon = j.value("horizon", c.horizon);
  c.batch_size = j.value("batch_size", c.batch_size);
  c.train_steps_per_iteration =
      j.value("train_steps_per_iteration", c.train_steps_per_iteration);
  c.learning_rate = j.value("learning_rate", c.learning_rate);
  c.gamma = j.value("gamma", c.gamma);
  c.epsilon_start = j.value("epsilon_start", c.epsilon_start);
  c.epsilon_final = j.value("epsilon_final", c.epsilon_final);
  c.epsilon_decay_frames = j.value("epsilon_decay_frames", c.epsilon_decay_frames);
  c.buffer_capacity = j.value("buffer_capacity", c.buffer_capacity);
  c.target_update = j.value("target_update", c.target_update);
  c.seed = j.value("seed", c.seed);
  if (j.contains("classes")) {
    c.class_mode = parse_class_mode(j.at("classes").get<std::string>());
  }
  c.max_rounds = j.value("max_rounds", c.max_rounds);
  return c;
}

void save_checkpoint(const Checkpoint& c, const std::filesystem::path& path) {
  json j{{"format", Checkpoint::kFormat},
         {"version", Checkpoint::kVersion},
         {"frame", c.frame},
         {"iteration", c.iteration},
         {"config", c.config.to_json()},
         {"reward_curve", c.reward_curve},
         {"num_params", c.params.size()},
         {"params", std::vector<double>(c.params.data(),
                                        c.params.data() + c.params.size())}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write checkpoint " + path.string());
  out << j.dump() << '\n';
  if (!out) throw std::runtime_error("failed writing checkpoint " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open checkpoint " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("checkpoint " + path.string() + ": " + e.what());
  }
  if (j.value("format", "") != Checkpoint::kFormat) {
    throw std::runtime_error(path.string() + " is not a dndrl checkpoint");
  }
  if (j.at("version").get<int>() != Checkpoint::kVersion) {
    throw std::runtime_error("unsupported checkpoint version");
  }
  Checkpoint c;
  c.frame = j.at("frame").get<long>();
  c.iteration = j.at("iteration").get<int>();
  c.config = TrainConfig::from_json(j.at("config"));
  c.reward_curve = j.at("reward_curve").get<std::vector<double>>();
  const auto p = j.at("params").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(p.size()) != Net::num_params()) {
    throw std::runtime_error("checkpoint parameter count mismatch");
  }
  c.params = Eigen::Map<const Net::Vec>(p.data(), static_cast<Eigen::Index>(p.size()));
  return c;
}

Net network_from(const Checkpoint& c) {
  Net net;
  net.set_params(c.params);
  return net;
}

Net initial_network(std::uint64_t seed) {
  RngStream rng(derive_seed(seed, kInitStream, 0));
  return Net::initialized(rng);
}

TrainResult train(const TrainConfig& config, const AdversaryPicker& adversary,
                  const std::function<void(const TrainProgress&)>& on_iteration) {
  if (config.iterations < 0 || config.horizon < 1 || config.batch_size < 1 ||
      config.buffer_capacity < config.batch_size || config.target_update < 1) {
    throw std::invalid_argument("invalid training configuration");
  }
  Net online = initial_network(config.seed);
  Net target = online;
  Adam<double> opt(Net::num_params(), config.learning_rate);
  ReplayBuffer buffer(static_cast<size_t>(config.buffer_capacity));
  RngStream act_rng(derive_seed(config.seed, kActStream, 0));
  RngStream sample_rng(derive_seed(config.seed, kSampleStream, 0));

  EpisodeConfig ec;
  ec.class_mode = config.class_mode;
  ec.seed = config.seed;
  ec.max_rounds = config.max_rounds;
  ec.record_log = false;
  ec.sheets = config.sheets;
  CombatEnv env(ec, adversary(0));

  TrainResult result;
  std::uint64_t episode = 0;
  std::vector<double> finished;
  Observation obs;
  auto start_episode = [&] {
    while (true) {
      env.set_adversary(adversary(episode));
      obs = env.reset(derive_seed(config.seed, kEpisodeStream, episode));
      ++episode;
      if (!env.done()) return;
      finished.push_back(env.final_reward());
    }
  };
  start_episode();

  long frame = 0;
  double last_mean = 0;
  Checkpoint& ck = result.checkpoint;
  for (int it = 0; it < config.iterations; ++it) {
    finished.clear();
    for (int s = 0; s < config.horizon; ++s) {
      const double eps = epsilon_at(frame, config.epsilon_start,
                                    config.epsilon_final,
                                    config.epsilon_decay_frames);
      const int idx = select_action(online, obs, eps, act_rng);
      const ActionEncoding chosen = obs.legal[idx];
      StepResult r = env.step(idx);
      Transition t;
      t.obs = std::move(obs);
      t.action = chosen;
      t.reward = r.reward;
      t.done = r.done;
      if (!r.done) t.next = r.observation;
      ++frame;
      if (r.done) {
        finished.push_back(r.reward);
        buffer.push(std::move(t));
        start_episode();
      } else {
        obs = std::move(r.observation);
        buffer.push(std::move(t));
      }
    }
    double loss = 0;
    if (buffer.size() >= static_cast<size_t>(config.batch_size)) {
      for (int k = 0; k < config.train_steps_per_iteration; ++k) {
        const auto batch =
            buffer.sample(static_cast<size_t>(config.batch_size), sample_rng);
        loss = train_step(online, target, opt, batch, config.gamma);
      }
    }
    if ((it + 1) % config.target_update == 0) target = online;
    if (!finished.empty()) {
      last_mean = std::accumulate(finished.begin(), finished.end(), 0.0) /
                  static_cast<double>(finished.size());
    }
    ck.reward_curve.push_back(last_mean);
    if (on_iteration) {
      on_iteration({it, frame, last_mean, static_cast<int>(finished.size()), loss});
    }
  }
  ck.params = online.params();
  ck.frame = frame;
  ck.iteration = config.iterations;
  ck.config = config;
  result.episodes = static_cast<long>(episode);
  return result;
}

DqnPolicy::DqnPolicy(std::shared_ptr<const Net> net, std::string name,
                     double epsilon)
    : net_(std::move(net)), name_(std::move(name)), epsilon_(epsilon) {
  if (!net_) throw std::invalid_argument("DqnPolicy: null network");
}

Action DqnPolicy::choose(const GameState& state, RngStream& rng) {
  const Observation obs = encode_observation(state, state.active_id());
  const int idx = select_action(*net_, obs, epsilon_, rng);
  return enumerate_actions(state).at(static_cast<size_t>(idx));
}

}  // namespace dndrl
