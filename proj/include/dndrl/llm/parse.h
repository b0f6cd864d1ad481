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

#ifndef DNDRL_LLM_PARSE_H_
#define DNDRL_LLM_PARSE_H_

#include <optional>
#include <string_view>

namespace dndrl::llm {

// Menu index from a model reply, or nullopt when the caller should fall back.
// Accepted: "N: text", a bare "N", the JSON object {"action": N} and its
// single-quoted Python-dict spelling {'action': N}. N must lie in
// [0, menu_size).
std::optional<int> parse_response(std::string_view text, int menu_size);

}  // namespace dndrl::llm

#endif  // DNDRL_LLM_PARSE_H_
