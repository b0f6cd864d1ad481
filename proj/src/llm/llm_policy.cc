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

#include "dndrl/llm/llm_policy.h"

#include <fstream>
#include <stdexcept>

#include "dndrl/llm/parse.h"
#include "dndrl/llm/prompt.h"

namespace dndrl::llm {

using nlohmann::json;

namespace {
constexpr std::uint64_t kMixStream = 0x4d4958;
}  // namespace

const char* route_name(Route r) {
  return r == Route::kPrimary ? "primary" : "secondary";
}

Route RoutingPolicy::route(const std::vector<Action>& menu) const {
  for (const Action& a : menu) {
    if (a.is_major()) return Route::kPrimary;
  }
  return Route::kSecondary;
}

const std::string& RoutingPolicy::model_for(Route r) const {
  if (r == Route::kSecondary && !secondary_model.empty()) return secondary_model;
  return primary_model;
}

json TelemetryRecord::to_json() const {
  return json{{"policy", policy},       {"model", model},
              {"route", route_name(route)},
              {"menu_size", menu_size}, {"choice", choice},
              {"valid", valid},         {"transport_ok", transport_ok},
              {"attempts", attempts},   {"status", status},
              {"latency_s", latency_s}, {"error", error},
              {"reply", reply}};
}

void Telemetry::add(TelemetryRecord r) {
  std::lock_guard lock(mu_);
  records_.push_back(std::move(r));
}

std::vector<TelemetryRecord> Telemetry::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

size_t Telemetry::size() const {
  std::lock_guard lock(mu_);
  return records_.size();
}

double Telemetry::validity_rate() const {
  std::lock_guard lock(mu_);
  if (records_.empty()) return 1.0;
  size_t valid = 0;
  for (const auto& r : records_) valid += r.valid;
  return static_cast<double>(valid) / static_cast<double>(records_.size());
}

void Telemetry::write_jsonl(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write telemetry " + path.string());
  for (const auto& r : records()) out << r.to_json().dump() << '\n';
}

LlmPolicy::LlmPolicy(std::shared_ptr<const ChatClient> client,
                     RoutingPolicy routing, std::shared_ptr<Telemetry> telemetry,
                     std::string name)
    : client_(std::move(client)),
      routing_(std::move(routing)),
      telemetry_(std::move(telemetry)),
      name_(std::move(name)) {
  if (!client_) throw std::invalid_argument("LlmPolicy: null client");
}

Action LlmPolicy::choose(const GameState& state, RngStream& rng) {
  const auto menu = enumerate_actions(state);
  const int n = static_cast<int>(menu.size());
  TelemetryRecord rec;
  rec.policy = name_;
  rec.menu_size = n;
  rec.route = routing_.route(menu);
  rec.model = routing_.model_for(rec.route);

  const std::string prompt = build_prompt(state, state.active_id());
  const ChatResult res = client_->complete(rec.model, {{"user", prompt}}, n);
  rec.transport_ok = res.ok;
  rec.attempts = res.attempts;
  rec.status = res.status;
  rec.latency_s = res.latency_s;
  rec.error = res.error;
  rec.reply = res.text;

  std::optional<int> idx;
  if (res.ok) idx = parse_response(res.text, n);
  rec.valid = idx.has_value();
  if (!idx) {
    if (res.ok) rec.error = "unparsable reply";
    idx = rng.uniform_int(0, n - 1);
  }
  rec.choice = *idx;
  if (telemetry_) telemetry_->add(std::move(rec));
  return menu[static_cast<size_t>(*idx)];
}

AdversaryKind assign_adversary(std::uint64_t episode, const MixSchedule& s) {
  if (s.llm_fraction < 0 || s.llm_fraction > 1) {
    throw std::invalid_argument("llm_fraction must be in [0, 1]");
  }
  RngStream rng(derive_seed(s.seed, kMixStream, episode));
  return rng.uniform01() < s.llm_fraction ? AdversaryKind::kLlm
                                          : AdversaryKind::kRules;
}

}  // namespace dndrl::llm
