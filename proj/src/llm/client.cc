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

#include "dndrl/llm/client.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <regex>
#include <stdexcept>
#include <thread>

#include "httplib.h"

namespace dndrl::llm {

using nlohmann::json;

json EndpointConfig::to_json() const {
  return json{{"url", url},
              {"api_key_env", api_key_env},
              {"timeout_s", timeout_s},
              {"retries", retries},
              {"backoff_s", backoff_s},
              {"temperature", temperature},
              {"use_tools", use_tools}};
}

EndpointConfig EndpointConfig::from_json(const json& j) {
  EndpointConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key != "url" && key != "api_key_env" && key != "timeout_s" &&
        key != "retries" && key != "backoff_s" && key != "temperature" &&
        key != "use_tools") {
      throw std::invalid_argument("unknown endpoint config key '" + key + "'");
    }
  }
  c.url = j.value("url", c.url);
  c.api_key_env = j.value("api_key_env", c.api_key_env);
  c.timeout_s = j.value("timeout_s", c.timeout_s);
  c.retries = j.value("retries", c.retries);
  c.backoff_s = j.value("backoff_s", c.backoff_s);
  c.temperature = j.value("temperature", c.temperature);
  c.use_tools = j.value("use_tools", c.use_tools);
  return c;
}

json build_request(const std::string& model,
                   const std::vector<ChatMessage>& messages, double temperature,
                   int tool_menu_size) {
  json msgs = json::array();
  for (const ChatMessage& m : messages) {
    msgs.push_back({{"role", m.role}, {"content", m.content}});
  }
  json body{{"model", model}, {"messages", msgs}, {"temperature", temperature}};
  if (tool_menu_size > 0) {
    body["tools"] = json::array({json{
        {"type", "function"},
        {"function",
         {{"name", "choose_action"},
          {"description", "Pick one entry of the numbered action menu."},
          {"parameters",
           {{"type", "object"},
            {"properties",
             {{"action",
               {{"type", "integer"},
                {"minimum", 0},
                {"maximum", tool_menu_size - 1}}}}},
            {"required", json::array({"action"})}}}}}}});
    body["tool_choice"] = {{"type", "function"},
                           {"function", {{"name", "choose_action"}}}};
  }
  return body;
}

std::optional<std::string> extract_reply(const json& response, bool* via_tool) {
  if (via_tool) *via_tool = false;
  if (!response.is_object() || !response.contains("choices")) return std::nullopt;
  const json& choices = response["choices"];
  if (!choices.is_array() || choices.empty()) return std::nullopt;
  const json& msg = choices[0].value("message", json::object());
  if (!msg.is_object()) return std::nullopt;
  if (msg.contains("tool_calls") && msg["tool_calls"].is_array() &&
      !msg["tool_calls"].empty()) {
    const json& fn = msg["tool_calls"][0].value("function", json::object());
    if (fn.is_object() && fn.contains("arguments") && fn["arguments"].is_string()) {
      if (via_tool) *via_tool = true;
      return fn["arguments"].get<std::string>();
    }
  }
  if (msg.contains("content") && msg["content"].is_string()) {
    return msg["content"].get<std::string>();
  }
  return std::nullopt;
}

ChatClient::ChatClient(EndpointConfig config) : config_(std::move(config)) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(config_.url, m, kUrl)) {
    throw std::invalid_argument("endpoint url must look like http://host:port/v1, got '" +
                                config_.url + "'");
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (config_.url.rfind("https://", 0) == 0) {
    throw std::invalid_argument("this build has no TLS support; use an http:// endpoint");
  }
#endif
  origin_ = m[1].str();
  std::string prefix = m[2].matched ? m[2].str() : "";
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  path_ = prefix + "/chat/completions";
  if (config_.timeout_s <= 0) throw std::invalid_argument("timeout must be > 0");
  if (config_.retries < 0) throw std::invalid_argument("retries must be >= 0");
}

ChatResult ChatClient::complete(const std::string& model,
                                const std::vector<ChatMessage>& messages,
                                int tool_menu_size) const {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::string body =
      build_request(model, messages, config_.temperature,
                    config_.use_tools ? tool_menu_size : 0)
          .dump();
  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  const auto secs = static_cast<time_t>(config_.timeout_s);
  const auto usecs = static_cast<time_t>(
      std::llround((config_.timeout_s - static_cast<double>(secs)) * 1e6));

  ChatResult r;
  double backoff = config_.backoff_s;
  for (int attempt = 0; attempt <= config_.retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::duration<double>(backoff));
      backoff *= 2;
    }
    r.attempts = attempt + 1;
    httplib::Client cli(origin_);
    cli.set_connection_timeout(secs, usecs);
    cli.set_read_timeout(secs, usecs);
    cli.set_write_timeout(secs, usecs);
    auto res = cli.Post(path_, headers, body, "application/json");
    if (!res) {
      r.status = 0;
      r.error = "transport: " + httplib::to_string(res.error());
      continue;
    }
    r.status = res->status;
    if (res->status == 429 || res->status >= 500) {
      r.error = "http " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      r.error = "http " + std::to_string(res->status);
      break;
    }
    const json j = json::parse(res->body, nullptr, false);
    bool tool = false;
    auto text = extract_reply(j, &tool);
    if (!text) {
      r.error = "malformed completion body";
      break;
    }
    r.ok = true;
    r.text = std::move(*text);
    r.via_tool = tool;
    r.error.clear();
    break;
  }
  r.latency_s = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace dndrl::llm
