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

// Text prompt describing the current turn to a language model. Wording,
// line breaks and spelling follow the reference prompt exactly, typos
// included, since models were prompted with that text.

#ifndef DNDRL_LLM_PROMPT_H_
#define DNDRL_LLM_PROMPT_H_

#include <string>
#include <string_view>
#include <vector>

#include "dndrl/engine.h"

namespace dndrl::llm {

// Glyph legend printed under the map.
extern const std::string_view kLegend;
// Closing instruction on how to answer.
extern const std::string_view kAnswerInstruction;

struct PromptContext {
  int pov = 0;
  std::string own_class;
  std::string enemy_class;
  std::string own_health;    // "[83.33333333]"
  int own_hp = 0;
  int own_max_hp = 0;
  std::string enemy_health;
  std::vector<std::string> own_conditions;
  std::vector<std::string> enemy_conditions;
  int movement = 0;
  int actions = 0;
  int bonus_actions = 0;
  int reactions = 0;
  std::string map;                 // render_ascii rows
  std::vector<std::string> menu;   // "i: text", i dense from 0
};

// pov must be alive and active.
PromptContext make_context(const GameState& state, int pov);
std::string render_prompt(const PromptContext& ctx);
std::string build_prompt(const GameState& state, int pov);

}  // namespace dndrl::llm

#endif  // DNDRL_LLM_PROMPT_H_
