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

// Scripted local chat-completions endpoint for offline tests and dry runs.

#ifndef DNDRL_LLM_MOCK_SERVER_H_
#define DNDRL_LLM_MOCK_SERVER_H_

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

namespace httplib {
class Server;
}

namespace dndrl::llm {

// First matching rule answers. A rule matches when its model (if any) equals
// the request model, its pattern (if any) is found in the last message, and
// it has uses left.
struct MockRule {
  std::string pattern;               // ECMAScript regex, searched
  std::optional<std::string> model;
  std::string reply;                 // message content
  std::optional<int> tool_action;    // answer through a tool call instead
  int delay_ms = 0;
  int status = 200;                  // non-200 sends an error body
  int times = -1;                    // uses left; -1 unlimited
  bool raw = false;                  // send `reply` as the whole body

  static MockRule from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct MockRequest {
  std::string model;
  std::string prompt;  // content of the last message
  bool had_tools = false;
  int status = 0;
  int rule = -1;       // index of the rule that answered, -1 for none
};

std::vector<MockRule> load_mock_script(const nlohmann::json& j);
std::vector<MockRule> load_mock_script_file(const std::filesystem::path& path);

class MockServer {
 public:
  // Binds 127.0.0.1 on `port` (0 picks a free port) and serves in the
  // background until destroyed. Throws std::runtime_error if the bind fails.
  explicit MockServer(std::vector<MockRule> rules, int port = 0);
  ~MockServer();
  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  int port() const { return port_; }
  // "http://127.0.0.1:<port>/v1"
  std::string url() const;
  std::vector<MockRequest> requests() const;
  void stop();

 private:
  struct Compiled {
    MockRule rule;
    std::optional<std::regex> re;
    int left;
  };

  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  mutable std::mutex mu_;
  std::vector<Compiled> rules_;
  std::vector<MockRequest> log_;
  int counter_ = 0;
};

}  // namespace dndrl::llm

#endif  // DNDRL_LLM_MOCK_SERVER_H_
