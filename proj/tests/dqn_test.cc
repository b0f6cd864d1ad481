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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "dqn_util.h"

namespace dndrl {
namespace {

using testing::collect_transitions;
using testing::naive_target;
using testing::pointers;

Transition tagged(double reward) {
  Transition t;
  t.reward = reward;
  t.done = true;
  return t;
}

// Upper 0.1% point of chi-square with k degrees of freedom
// (Wilson-Hilferty).
double chi2_critical(int k) {
  const double z = 3.0902;
  const double a = 2.0 / (9.0 * k);
  return k * std::pow(1 - a + z * std::sqrt(a), 3);
}

TEST(ReplayBufferTest, OverwritesOldest) {
  ReplayBuffer buf(3);
  for (int i = 0; i < 5; ++i) buf.push(tagged(i));
  ASSERT_EQ(buf.size(), 3u);
  EXPECT_EQ(buf.at(0).reward, 2);
  EXPECT_EQ(buf.at(1).reward, 3);
  EXPECT_EQ(buf.at(2).reward, 4);
  EXPECT_THROW(buf.at(3), std::out_of_range);
  EXPECT_THROW(ReplayBuffer(0), std::invalid_argument);
}

TEST(ReplayBufferTest, SampleDistinctAndUniform) {
  ReplayBuffer buf(10);
  for (int i = 0; i < 10; ++i) buf.push(tagged(i));
  RngStream rng(1);
  std::vector<int> counts(10, 0);
  const int draws = 5000;
  for (int d = 0; d < draws; ++d) {
    const auto s = buf.sample(4, rng);
    std::vector<double> r;
    for (const Transition* t : s) r.push_back(t->reward);
    std::sort(r.begin(), r.end());
    EXPECT_EQ(std::adjacent_find(r.begin(), r.end()), r.end());
    for (double x : r) ++counts[static_cast<int>(x)];
  }
  const double expected = draws * 4 / 10.0;
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, chi2_critical(9));
  EXPECT_THROW(buf.sample(11, rng), std::invalid_argument);
}

TEST(ReplayBufferTest, FirstTransitionGoneAfterOverflow) {
  ReplayBuffer buf(3000);
  for (int i = 0; i < 3001; ++i) buf.push(tagged(i));
  EXPECT_EQ(buf.size(), 3000u);
  EXPECT_EQ(buf.at(0).reward, 1);
  EXPECT_EQ(buf.at(2999).reward, 3000);
}

TEST(EpsilonTest, LinearSchedule) {
  EXPECT_DOUBLE_EQ(epsilon_at(0), 1.0);
  EXPECT_NEAR(epsilon_at(500), 0.505, 1e-12);
  EXPECT_DOUBLE_EQ(epsilon_at(1000), 0.01);
  EXPECT_DOUBLE_EQ(epsilon_at(5000), 0.01);
  EXPECT_THROW(epsilon_at(-1), std::invalid_argument);
}

TEST(SelectActionTest, FullExplorationIsUniform) {
  const auto data = collect_transitions(50, 3);
  const Transition* wide = &data[0];
  for (const Transition& t : data) {
    if (t.obs.legal.size() > wide->obs.legal.size()) wide = &t;
  }
  const int n = static_cast<int>(wide->obs.legal.size());
  ASSERT_GE(n, 5);
  RngStream init(1);
  const Net net = Net::initialized(init);
  RngStream rng(2);
  std::vector<int> counts(n, 0);
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) ++counts[select_action(net, wide->obs, 1.0, rng)];
  const double expected = static_cast<double>(draws) / n;
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, chi2_critical(n - 1));
}

TEST(SelectActionTest, GreedyTakesArgmax) {
  const auto data = collect_transitions(20, 4);
  RngStream init(5);
  const Net net = Net::initialized(init);
  RngStream rng(6);
  for (const Transition& t : data) {
    const auto q = net.q_all(t.obs);
    const int best = static_cast<int>(std::max_element(q.begin(), q.end()) - q.begin());
    EXPECT_EQ(select_action(net, t.obs, 0.0, rng), best);
  }
}

TEST(SelectActionTest, StrictlyBestActionAlwaysChosen) {
  const auto data = collect_transitions(30, 7);
  const Transition* t = &data[0];
  for (const Transition& x : data) {
    if (x.obs.legal.size() > 3 && x.obs.legal[3].action_type != x.obs.legal[0].action_type) {
      t = &x;
      break;
    }
  }
  ASSERT_GT(t->obs.legal.size(), 3u);
  // Only the output bias and the action-type embedding path carry weight, so
  // Q depends on the action type alone; make entry 3's type the best.
  const auto& l = nn_detail::layout();
  Net::Vec p = Net::Vec::Zero(Net::num_params());
  const int type3 = t->obs.legal[3].action_type;
  p[l.emb[0].offset + l.emb[0].rows * type3] = 1.0;           // emb[type3][0] = 1
  p[l.fc_w[0].offset + l.fc_w[0].rows * nn_detail::kEmbColumn[0]] = 1.0;  // h1[0] += x
  p[l.fc_w[1].offset] = 1.0;
  p[l.fc_w[2].offset] = 1.0;
  p[l.fc_w[3].offset] = 1.0;
  Net net;
  net.set_params(p);
  int best_count = 0;
  for (const ActionEncoding& a : t->obs.legal) best_count += a.action_type == type3;
  ASSERT_EQ(best_count, 1);
  RngStream rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(select_action(net, t->obs, 0.0, rng), 3);
}

TEST(SelectActionTest, TiesGoToLowestIndex) {
  const auto data = collect_transitions(1, 7);
  Net zero;
  zero.sync();
  RngStream rng(8);
  EXPECT_EQ(select_action(zero, data[0].obs, 0.0, rng), 0);
  Observation empty = data[0].obs;
  empty.legal.clear();
  EXPECT_THROW(select_action(zero, empty, 0.0, rng), std::invalid_argument);
}

TEST(TdTargetTest, TerminalAndBootstrap) {
  // Zero network with output bias 2: every Q is 2.
  Net net;
  Net::Vec p = Net::Vec::Zero(Net::num_params());
  p[nn_detail::layout().fc_b[3].offset] = 2.0;
  net.set_params(p);
  auto data = collect_transitions(30, 9);
  const Transition* live = nullptr;
  for (const Transition& t : data) {
    if (!t.done) live = &t;
  }
  ASSERT_NE(live, nullptr);
  Transition boot = *live;
  boot.reward = 0;
  Transition term = tagged(10);
  const auto y = td_targets({&term, &boot}, net, 0.99);
  EXPECT_DOUBLE_EQ(y[0], 10.0);
  EXPECT_NEAR(y[1], 1.98, 1e-12);
}

TEST(TdTargetTest, HandBuiltBatchMatchesScalarOracle) {
  auto data = collect_transitions(60, 10);
  std::vector<Transition> batch;
  for (const Transition& t : data) {
    if (!t.done && batch.size() < 2) batch.push_back(t);
  }
  batch.push_back(tagged(-3.5));
  batch[0].reward = 0.25;
  batch[1].reward = -1;
  RngStream init(11);
  const Net target = Net::initialized(init);
  const auto y = td_targets(pointers(batch), target, 0.9);
  ASSERT_EQ(y.size(), 3u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(y[i], naive_target(target.params(), batch[i], 0.9), 1e-6);
  }
}

TEST(TrainStepTest, FixedPointLeavesWeightsUnchanged) {
  auto data = collect_transitions(40, 12);
  RngStream init(13);
  Net net = Net::initialized(init);
  const Net target = net;
  // Rewards chosen so each TD error is exactly zero.
  std::vector<Transition> batch(data.begin(), data.begin() + 16);
  for (Transition& t : batch) {
    double boot = 0;
    if (!t.done) {
      const auto q = target.q_all(t.next);
      boot = 0.99 * *std::max_element(q.begin(), q.end());
    }
    t.reward = net.q_value(t.obs, t.action) - boot;
  }
  const auto ptrs = pointers(batch);
  EXPECT_LT(batch_loss(net, target, ptrs, 0.99), 1e-20);
  const Net::Vec before = net.params();
  Adam<double> opt(Net::num_params(), 1e-3);
  train_step(net, target, opt, ptrs, 0.99);
  EXPECT_LT((net.params() - before).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(TrainStepTest, OverfitsSingleTransition) {
  const auto data = collect_transitions(5, 14);
  Transition t = data[0];
  t.done = true;
  t.reward = 10;
  RngStream init(15);
  Net net = Net::initialized(init);
  const Net target = net;
  Adam<double> opt(Net::num_params(), 1e-3);
  const std::vector<const Transition*> batch = {&t};
  for (int i = 0; i < 500; ++i) train_step(net, target, opt, batch, 0.99);
  EXPECT_LT(batch_loss(net, target, batch, 0.99), 1e-3);
}

TEST(TrainStepTest, FrozenBufferLossDecreases) {
  // Full-buffer loss before and after 100 minibatch steps, over 5 seeds;
  // the median run must improve.
  std::vector<double> ratios;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto data = collect_transitions(256, 16 + seed);
    ReplayBuffer buf(256);
    for (const Transition& t : data) buf.push(t);
    const auto all = pointers(data);
    RngStream init(17 + seed);
    Net net = Net::initialized(init);
    const Net target = net;
    Adam<double> opt(Net::num_params(), 1e-3);
    RngStream rng(18 + seed);
    const double before = batch_loss(net, target, all, 0.99);
    for (int i = 0; i < 100; ++i) {
      train_step(net, target, opt, buf.sample(32, rng), 0.99);
    }
    ratios.push_back(batch_loss(net, target, all, 0.99) / before);
  }
  std::sort(ratios.begin(), ratios.end());
  EXPECT_LT(ratios[2], 1.0);
}

TEST(TrainConfigTest, JsonRoundTripAndStrictKeys) {
  TrainConfig c;
  c.iterations = 7;
  c.learning_rate = 5e-4;
  c.class_mode = ClassMode::kFourClasses;
  const TrainConfig back = TrainConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_EQ(TrainConfig::from_json(nlohmann::json::object()).to_json(),
            TrainConfig{}.to_json());
  EXPECT_THROW(TrainConfig::from_json({{"iteratons", 3}}), std::invalid_argument);
}

TEST(QNetworkSizeTest, UnderHundredThousandParameters) {
  EXPECT_LT(Net::num_params(), 100000);
}

TEST(TrainConfigTest, DefaultsMatchTable) {
  const TrainConfig c;
  EXPECT_EQ(c.iterations, 1000);
  EXPECT_EQ(c.horizon, 1024);
  EXPECT_EQ(c.batch_size, 64);
  EXPECT_EQ(c.train_steps_per_iteration, 2);
  EXPECT_DOUBLE_EQ(c.learning_rate, 1e-3);
  EXPECT_DOUBLE_EQ(c.gamma, 0.99);
  EXPECT_EQ(c.buffer_capacity, 3000);
  EXPECT_EQ(c.epsilon_decay_frames, 1000);
  EXPECT_EQ(c.target_update, 1);
}

TrainConfig small_config(std::uint64_t seed) {
  TrainConfig c;
  c.iterations = 10;
  c.horizon = 64;
  c.batch_size = 16;
  c.buffer_capacity = 256;
  c.seed = seed;
  return c;
}

AdversaryPicker rules_picker() {
  auto rules = std::make_shared<RulesPolicy>();
  return [rules](std::uint64_t) { return rules; };
}

TEST(TrainTest, DryRunProducesCurve) {
  int callbacks = 0;
  auto random = std::make_shared<RandomPolicy>();
  const TrainResult r = train(small_config(1),
                              [random](std::uint64_t) { return random; },
                              [&](const TrainProgress& p) {
                                EXPECT_EQ(p.iteration, callbacks);
                                ++callbacks;
                              });
  EXPECT_EQ(callbacks, 10);
  EXPECT_EQ(r.checkpoint.reward_curve.size(), 10u);
  EXPECT_EQ(r.checkpoint.frame, 640);
  EXPECT_GT(r.episodes, 0);
  for (double v : r.checkpoint.reward_curve) {
    EXPECT_GE(v, -10.0);
    EXPECT_LE(v, 10.0);
  }
}

TEST(TrainTest, SameSeedSameResult) {
  const TrainResult a = train(small_config(2), rules_picker());
  const TrainResult b = train(small_config(2), rules_picker());
  const TrainResult c = train(small_config(3), rules_picker());
  EXPECT_EQ(a.checkpoint.params, b.checkpoint.params);
  EXPECT_EQ(a.checkpoint.reward_curve, b.checkpoint.reward_curve);
  EXPECT_NE(a.checkpoint.params, c.checkpoint.params);
}

// Full-length runs: the mean reward of the last 100 iterations beats the
// first 100 for three seeds.
TEST(TrainTest, RewardTrendPositive) {
  for (std::uint64_t seed : {0, 1, 2}) {
    TrainConfig c;
    c.seed = seed;
    const auto curve = train(c, rules_picker()).checkpoint.reward_curve;
    ASSERT_EQ(curve.size(), 1000u);
    double first = 0, last = 0;
    for (size_t i = 0; i < 100; ++i) {
      first += curve[i];
      last += curve[900 + i];
    }
    EXPECT_GT(last, first) << "seed " << seed;
  }
}

TEST(TrainTest, RejectsBadConfig) {
  TrainConfig c = small_config(1);
  c.buffer_capacity = 8;
  EXPECT_THROW(train(c, rules_picker()), std::invalid_argument);
}

TEST(CheckpointTest, RoundTrip) {
  const TrainResult r = train(small_config(4), rules_picker());
  const auto path = std::filesystem::temp_directory_path() / "dndrl_ckpt_test.json";
  save_checkpoint(r.checkpoint, path);
  const Checkpoint back = load_checkpoint(path);
  EXPECT_EQ(back.params, r.checkpoint.params);
  EXPECT_EQ(back.reward_curve, r.checkpoint.reward_curve);
  EXPECT_EQ(back.frame, r.checkpoint.frame);
  EXPECT_EQ(back.config.to_json(), r.checkpoint.config.to_json());
  const Net net = network_from(back);
  const Net original = network_from(r.checkpoint);
  const auto probe = collect_transitions(64, 40);
  for (const Transition& t : probe) {
    EXPECT_EQ(net.q_value(t.obs, t.action), original.q_value(t.obs, t.action));
  }
  std::filesystem::remove(path);
}

TEST(CheckpointTest, RejectsForeignFiles) {
  const auto path = std::filesystem::temp_directory_path() / "dndrl_not_ckpt.json";
  std::ofstream(path) << "{\"format\": \"other\"}\n";
  EXPECT_THROW(load_checkpoint(path), std::runtime_error);
  std::ofstream(path) << "not json";
  EXPECT_THROW(load_checkpoint(path), std::runtime_error);
  std::filesystem::remove(path);
  EXPECT_THROW(load_checkpoint(path), std::runtime_error);
}

TEST(DqnPolicyTest, ChoosesLegalGreedyAction) {
  auto net = std::make_shared<const Net>(initial_network(5));
  DqnPolicy policy(net, "dqn");
  const GameState s = new_fight(sample_episode(EpisodeConfig{}, 3));
  RngStream rng(1);
  const Action a = policy.choose(s, rng);
  const auto menu = enumerate_actions(s);
  EXPECT_NE(std::find(menu.begin(), menu.end(), a), menu.end());
  RngStream rng2(99);
  EXPECT_EQ(policy.choose(s, rng2), a);
  EXPECT_THROW(DqnPolicy(nullptr, "x"), std::invalid_argument);
}

}  // namespace
}  // namespace dndrl
