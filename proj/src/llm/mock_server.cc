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

#include "dndrl/llm/mock_server.h"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include "httplib.h"

namespace dndrl::llm {

using nlohmann::json;

MockRule MockRule::from_json(const json& j) {
  static const char* kKeys[] = {"pattern", "model", "reply", "tool_action",
                                "delay_ms", "status", "times", "raw"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKeys) known |= key == k;
    if (!known) throw std::invalid_argument("unknown mock rule key '" + key + "'");
  }
  MockRule r;
  r.pattern = j.value("pattern", "");
  if (j.contains("model")) r.model = j.at("model").get<std::string>();
  r.reply = j.value("reply", "");
  if (j.contains("tool_action")) r.tool_action = j.at("tool_action").get<int>();
  r.delay_ms = j.value("delay_ms", 0);
  r.status = j.value("status", 200);
  r.times = j.value("times", -1);
  r.raw = j.value("raw", false);
  return r;
}

json MockRule::to_json() const {
  json j{{"pattern", pattern}, {"reply", reply}, {"delay_ms", delay_ms},
         {"status", status},   {"times", times}, {"raw", raw}};
  if (model) j["model"] = *model;
  if (tool_action) j["tool_action"] = *tool_action;
  return j;
}

std::vector<MockRule> load_mock_script(const json& j) {
  const json& rules = j.is_object() ? j.at("rules") : j;
  if (!rules.is_array()) throw std::invalid_argument("mock script must list rules");
  std::vector<MockRule> out;
  for (const json& r : rules) out.push_back(MockRule::from_json(r));
  return out;
}

std::vector<MockRule> load_mock_script_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mock script " + path.string());
  return load_mock_script(json::parse(in));
}

MockServer::MockServer(std::vector<MockRule> rules, int port)
    : server_(std::make_unique<httplib::Server>()) {
  for (MockRule& r : rules) {
    Compiled c{r, std::nullopt, r.times};
    if (!r.pattern.empty()) c.re.emplace(r.pattern);
    rules_.push_back(std::move(c));
  }

  server_->Post(R"(.*/chat/completions)", [this](const httplib::Request& req,
                                                 httplib::Response& res) {
    MockRequest logged;
    const json body = json::parse(req.body, nullptr, false);
    if (body.is_object()) {
      logged.model = body.value("model", "");
      logged.had_tools = body.contains("tools");
      if (body.contains("messages") && body["messages"].is_array() &&
          !body["messages"].empty()) {
        const json& last = body["messages"].back();
        if (last.contains("content") && last["content"].is_string()) {
          logged.prompt = last["content"].get<std::string>();
        }
      }
    }

    std::optional<MockRule> chosen;
    int id = 0;
    {
      std::lock_guard lock(mu_);
      id = ++counter_;
      for (size_t i = 0; i < rules_.size(); ++i) {
        Compiled& c = rules_[i];
        if (c.left == 0) continue;
        if (c.rule.model && *c.rule.model != logged.model) continue;
        if (c.re && !std::regex_search(logged.prompt, *c.re)) continue;
        if (c.left > 0) --c.left;
        chosen = c.rule;
        logged.rule = static_cast<int>(i);
        break;
      }
    }

    if (!body.is_object()) {
      res.status = 400;
      res.set_content(R"({"error":{"message":"invalid json"}})", "application/json");
    } else if (!chosen) {
      res.status = 500;
      res.set_content(R"({"error":{"message":"no mock rule matched"}})",
                      "application/json");
    } else {
      if (chosen->delay_ms > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(chosen->delay_ms));
      }
      res.status = chosen->status;
      if (chosen->raw) {
        res.set_content(chosen->reply, "application/json");
      } else if (chosen->status != 200) {
        res.set_content(json{{"error", {{"message", chosen->reply}}}}.dump(),
                        "application/json");
      } else {
        json message{{"role", "assistant"}, {"content", chosen->reply}};
        if (chosen->tool_action && logged.had_tools) {
          message["content"] = nullptr;
          message["tool_calls"] = json::array(
              {{{"id", "call_" + std::to_string(id)},
                {"type", "function"},
                {"function",
                 {{"name", "choose_action"},
                  {"arguments",
                   json{{"action", *chosen->tool_action}}.dump()}}}}});
        }
        const json out{
            {"id", "mock-" + std::to_string(id)},
            {"object", "chat.completion"},
            {"created", 0},
            {"model", logged.model},
            {"choices",
             json::array({{{"index", 0},
                           {"message", message},
                           {"finish_reason",
                            message.contains("tool_calls") ? "tool_calls" : "stop"}}})},
            {"usage",
             {{"prompt_tokens", 0}, {"completion_tokens", 0}, {"total_tokens", 0}}}};
        res.set_content(out.dump(), "application/json");
      }
    }
    logged.status = res.status;
    std::lock_guard lock(mu_);
    log_.push_back(std::move(logged));
  });

  if (port == 0) {
    port_ = server_->bind_to_any_port("127.0.0.1");
  } else if (server_->bind_to_port("127.0.0.1", port)) {
    port_ = port;
  } else {
    port_ = -1;
  }
  if (port_ <= 0) {
    throw std::runtime_error("mock server: cannot bind 127.0.0.1:" +
                             std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

MockServer::~MockServer() { stop(); }

void MockServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string MockServer::url() const {
  return "http://127.0.0.1:" + std::to_string(port_) + "/v1";
}

std::vector<MockRequest> MockServer::requests() const {
  std::lock_guard lock(mu_);
  return log_;
}

}  // namespace dndrl::llm
