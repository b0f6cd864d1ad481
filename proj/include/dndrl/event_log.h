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

// Line-delimited combat logs. A log is a header record (map, sheets, seed),
// one record per event and a footer record (outcome, final state hash). The
// schema is documented in docs/formats.md.

#ifndef DNDRL_EVENT_LOG_H_
#define DNDRL_EVENT_LOG_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dndrl/engine.h"
#include "json.hpp"

namespace dndrl {

class LogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kLogVersion = 1;

// FNV-1a over every field that influences future play, including the random
// stream position.
std::uint64_t state_hash(const GameState& state);
std::string hash_hex(std::uint64_t h);

nlohmann::json action_to_json(const Action& a);
Action action_from_json(const nlohmann::json& j);
nlohmann::json event_to_json(const CombatEvent& e);
CombatEvent event_from_json(const nlohmann::json& j);

struct FightLog {
  std::string map_name;
  std::string map_text;  // file glyphs
  std::vector<nlohmann::json> sheets;  // [hero, enemy]
  std::vector<std::string> labels;     // agent names, informational
  std::uint64_t seed = 0;
  int max_rounds = kDefaultMaxRounds;
  std::vector<CombatEvent> events;
  bool complete = false;  // footer present
  Outcome outcome = Outcome::kOngoing;
  int rounds = 0;
  std::uint64_t final_hash = 0;
};

// Header fields filled from a setup; events and footer left empty.
FightLog start_log(const FightSetup& setup, std::vector<std::string> labels);
void finish_log(FightLog& log, const GameState& final_state);

void write_log(const FightLog& log, std::ostream& out);
void write_log_file(const FightLog& log, const std::filesystem::path& path);
// Throws LogError on malformed lines, a missing header or a missing footer.
FightLog read_log(std::istream& in);
FightLog read_log_file(const std::filesystem::path& path);

FightSetup setup_from_log(const FightLog& log);

struct ReplayResult {
  GameState final_state;
  std::vector<CombatEvent> events;
  std::uint64_t hash = 0;
};

// Re-applies the logged decisions (non-reaction events) from the initial
// state. Throws LogError when any regenerated event or the final hash differs
// from the log. `on_decision`, when set, sees the state after every
// re-applied decision together with the events it produced.
using ReplayObserver =
    std::function<void(const GameState&, const std::vector<CombatEvent>&)>;
ReplayResult replay(const FightLog& log, const ReplayObserver& on_decision = {});

}  // namespace dndrl

#endif  // DNDRL_EVENT_LOG_H_
