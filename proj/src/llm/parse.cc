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

#include "dndrl/llm/parse.h"

#include <regex>
#include <string>

#include "json.hpp"

namespace dndrl::llm {

namespace {

std::optional<int> in_range(const std::string& digits, int menu_size) {
  if (digits.empty() || digits.size() > 9) return std::nullopt;
  const int n = std::stoi(digits);
  if (n < 0 || n >= menu_size) return std::nullopt;
  return n;
}

}  // namespace

std::optional<int> parse_response(std::string_view text, int menu_size) {
  if (menu_size < 1) return std::nullopt;
  const std::string s(text);
  static const std::regex kNumbered(R"(^\s*(\d+)\s*(:[\s\S]*)?$)");
  static const std::regex kPyDict(R"(^\s*\{\s*'action'\s*:\s*(\d+)\s*\}\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, kNumbered)) return in_range(m[1].str(), menu_size);
  if (std::regex_match(s, m, kPyDict)) return in_range(m[1].str(), menu_size);

  const auto j = nlohmann::json::parse(s, nullptr, /*allow_exceptions=*/false);
  if (j.is_object() && j.size() == 1 && j.contains("action")) {
    const auto& a = j["action"];
    if (a.is_number_integer() || a.is_number_unsigned()) {
      const auto n = a.get<long long>();
      if (n >= 0 && n < menu_size) return static_cast<int>(n);
    }
  }
  return std::nullopt;
}

}  // namespace dndrl::llm
