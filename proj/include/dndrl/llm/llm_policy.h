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

// Language-model adversary: prompt, route, ask, parse, fall back.

#ifndef DNDRL_LLM_LLM_POLICY_H_
#define DNDRL_LLM_LLM_POLICY_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dndrl/adversaries.h"
#include "dndrl/llm/client.h"
#include "json.hpp"

namespace dndrl::llm {

enum class Route { kPrimary, kSecondary };
const char* route_name(Route r);

// Menus offering anything that spends the action slot go to the primary
// model; menus of movement, bonus actions and end turn go to the secondary.
struct RoutingPolicy {
  std::string primary_model = "primary";
  std::string secondary_model;  // empty: primary answers everything

  Route route(const std::vector<Action>& menu) const;
  const std::string& model_for(Route r) const;
};

struct TelemetryRecord {
  std::string policy;
  std::string model;
  Route route = Route::kPrimary;
  int menu_size = 0;
  int choice = 0;
  bool valid = false;       // reply parsed to a legal index
  bool transport_ok = false;
  int attempts = 0;
  int status = 0;
  double latency_s = 0;
  std::string error;
  std::string reply;

  nlohmann::json to_json() const;
};

// Thread-safe collector, shared by every LLM policy in a run.
class Telemetry {
 public:
  void add(TelemetryRecord r);
  std::vector<TelemetryRecord> records() const;
  size_t size() const;
  // valid replies / requests; 1 when there were no requests.
  double validity_rate() const;
  void write_jsonl(const std::filesystem::path& path) const;

 private:
  mutable std::mutex mu_;
  std::vector<TelemetryRecord> records_;
};

class LlmPolicy : public Policy {
 public:
  LlmPolicy(std::shared_ptr<const ChatClient> client, RoutingPolicy routing,
            std::shared_ptr<Telemetry> telemetry, std::string name = "llm");

  // Always legal: unusable replies and endpoint failures fall back to a
  // uniform random menu entry drawn from `rng`.
  Action choose(const GameState& state, RngStream& rng) override;
  std::string name() const override { return name_; }

 private:
  std::shared_ptr<const ChatClient> client_;
  RoutingPolicy routing_;
  std::shared_ptr<Telemetry> telemetry_;
  std::string name_;
};

// Share of training episodes played against the language model.
struct MixSchedule {
  double llm_fraction = 0.2;
  std::uint64_t seed = 0;
};

enum class AdversaryKind { kRules, kLlm };

// Deterministic in (episode, schedule); llm with probability llm_fraction.
AdversaryKind assign_adversary(std::uint64_t episode, const MixSchedule& schedule);

}  // namespace dndrl::llm

#endif  // DNDRL_LLM_LLM_POLICY_H_
