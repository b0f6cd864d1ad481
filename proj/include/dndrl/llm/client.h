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

// Minimal blocking client for OpenAI-compatible chat-completions endpoints.

#ifndef DNDRL_LLM_CLIENT_H_
#define DNDRL_LLM_CLIENT_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dndrl::llm {

struct ChatMessage {
  std::string role;
  std::string content;
};

struct EndpointConfig {
  // Base URL up to and including the API version, e.g.
  // "http://127.0.0.1:8000/v1"; requests go to <url>/chat/completions.
  std::string url = "http://127.0.0.1:8000/v1";
  // Name of the environment variable holding the bearer token. An unset or
  // empty variable sends no Authorization header.
  std::string api_key_env = "OPENAI_API_KEY";
  double timeout_s = 30.0;
  int retries = 2;           // extra attempts after the first
  double backoff_s = 0.5;    // doubled after every failed attempt
  double temperature = 0.0;
  bool use_tools = false;    // force {"action": integer} through tool calling

  nlohmann::json to_json() const;
  static EndpointConfig from_json(const nlohmann::json& j);
};

struct ChatResult {
  bool ok = false;
  std::string text;     // message content, or tool-call arguments
  bool via_tool = false;
  int status = 0;       // last HTTP status, 0 on transport failure
  int attempts = 0;
  double latency_s = 0; // wall time across all attempts
  std::string error;
};

// Request body; with `tool_menu_size` > 0 a choose_action tool restricted to
// [0, tool_menu_size) is attached and forced.
nlohmann::json build_request(const std::string& model,
                             const std::vector<ChatMessage>& messages,
                             double temperature, int tool_menu_size);

// Text of choices[0].message: the first tool call's arguments when present,
// otherwise the content string.
std::optional<std::string> extract_reply(const nlohmann::json& response,
                                         bool* via_tool = nullptr);

class ChatClient {
 public:
  explicit ChatClient(EndpointConfig config);

  // Retries on transport errors, HTTP 429 and 5xx. Never throws for network
  // problems; they come back as ok == false.
  ChatResult complete(const std::string& model,
                      const std::vector<ChatMessage>& messages,
                      int tool_menu_size = 0) const;

  const EndpointConfig& config() const { return config_; }

 private:
  EndpointConfig config_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;    // <prefix>/chat/completions
};

}  // namespace dndrl::llm

#endif  // DNDRL_LLM_CLIENT_H_
