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

// dndrl: train, tournament, replay, plot, validate-map, mock.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dndrl/assets.h"
#include "dndrl/dqn.h"
#include "dndrl/llm/llm_policy.h"
#include "dndrl/llm/mock_server.h"
#include "dndrl/render.h"
#include "dndrl/tournament.h"
#include "json.hpp"

#ifndef DNDRL_GIT_DESCRIBE
#define DNDRL_GIT_DESCRIBE "unknown"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dndrl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string joined_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const std::string& argv, const json& config,
                    std::uint64_t seed) {
  fs::create_directories(dir);
  json m{{"command", command},
         {"argv", argv},
         {"config", config},
         {"seed", seed},
         {"git_describe", DNDRL_GIT_DESCRIBE},
         {"output_dir", dir.string()}};
  std::ofstream out(dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
  out << m.dump(2) << '\n';
}

std::vector<std::shared_ptr<const BattleMap>> resolve_maps(
    const std::vector<std::string>& names) {
  std::vector<std::shared_ptr<const BattleMap>> out;
  for (const std::string& n : names) {
    if (fs::exists(n)) {
      out.push_back(std::make_shared<const BattleMap>(load_map_file(n)));
    } else {
      out.push_back(bundled_map(n));
    }
  }
  return out;
}

std::array<std::shared_ptr<const CharacterSheet>, 2> resolve_sheets(
    const std::string& party, const std::string& enemy) {
  std::array<std::shared_ptr<const CharacterSheet>, 2> s;
  if (!party.empty()) s[0] = std::make_shared<const CharacterSheet>(load_sheet_file(party));
  if (!enemy.empty()) s[1] = std::make_shared<const CharacterSheet>(load_sheet_file(enemy));
  return s;
}

// ---------------------------------------------------------------- train

struct TrainArgs {
  TrainConfig config;
  std::string classes = "fighter";
  std::string adversary = "rules";
  std::string llm_endpoint;
  std::string mock_script;
  std::string llm_model = "primary";
  std::string llm_secondary_model;
  bool llm_tools = false;
  double llm_timeout = 30.0;
  double llm_fraction = 0.2;
  std::string party;
  std::string enemy;
  std::string out = "runs/train";
  int log_every = 50;
};

void add_train(CLI::App& app, TrainArgs& a) {
  TrainConfig& c = a.config;
  app.add_option("--iterations", c.iterations, "Training iterations")->capture_default_str();
  app.add_option("--horizon", c.horizon, "Environment steps collected per iteration")
      ->capture_default_str();
  app.add_option("--batch-size", c.batch_size, "Minibatch size")->capture_default_str();
  app.add_option("--train-steps", c.train_steps_per_iteration,
                 "Gradient steps per iteration")->capture_default_str();
  app.add_option("--learning-rate,--lr", c.learning_rate, "Adam learning rate")
      ->capture_default_str();
  app.add_option("--gamma", c.gamma, "Discount factor")->capture_default_str();
  app.add_option("--epsilon-start", c.epsilon_start, "Initial exploration rate")
      ->capture_default_str();
  app.add_option("--epsilon-final", c.epsilon_final, "Final exploration rate")
      ->capture_default_str();
  app.add_option("--epsilon-decay", c.epsilon_decay_frames,
                 "Frames over which epsilon decays linearly")->capture_default_str();
  app.add_option("--buffer-size", c.buffer_capacity, "Replay buffer capacity")
      ->capture_default_str();
  app.add_option("--target-update", c.target_update,
                 "Iterations between target network updates")->capture_default_str();
  app.add_option("--seed", c.seed, "Base seed")->capture_default_str();
  app.add_option("--max-rounds", c.max_rounds, "Round cap per fight")->capture_default_str();
  app.add_option("--classes", a.classes, "fighter | four")->capture_default_str();
  app.add_option("--adversary", a.adversary, "rules | random | llm | mixed")
      ->capture_default_str();
  app.add_option("--llm-endpoint", a.llm_endpoint, "OpenAI-compatible base URL");
  app.add_option("--mock-script", a.mock_script,
                 "Serve a mock endpoint from this script and train against it");
  app.add_option("--llm-model", a.llm_model, "Primary model name")->capture_default_str();
  app.add_option("--llm-secondary-model", a.llm_secondary_model,
                 "Model for movement/bonus-only menus");
  app.add_flag("--llm-tools", a.llm_tools, "Request answers through tool calling");
  app.add_option("--llm-timeout", a.llm_timeout, "Seconds per request")->capture_default_str();
  app.add_option("--llm-fraction", a.llm_fraction,
                 "Share of episodes against the language model (mixed)")
      ->capture_default_str();
  app.add_option("--party", a.party, "Hero character file");
  app.add_option("--enemy", a.enemy, "Enemy character file");
  app.add_option("--out", a.out, "Run directory")->capture_default_str();
  app.add_option("--log-every", a.log_every, "Progress line every N iterations (0: off)")
      ->capture_default_str();
}

int run_train(TrainArgs& a, const std::string& argv) {
  TrainConfig& c = a.config;
  c.class_mode = parse_class_mode(a.classes);
  c.sheets = resolve_sheets(a.party, a.enemy);
  if (c.iterations < 1 || c.horizon < 1 || c.batch_size < 1 ||
      c.buffer_capacity < c.batch_size || c.target_update < 1) {
    throw UsageError("invalid training configuration");
  }
  const bool wants_llm = a.adversary == "llm" || a.adversary == "mixed";
  if (a.adversary != "rules" && a.adversary != "random" && !wants_llm) {
    throw UsageError("unknown adversary '" + a.adversary + "'");
  }
  std::unique_ptr<llm::MockServer> mock;
  auto telemetry = std::make_shared<llm::Telemetry>();
  std::shared_ptr<Policy> llm_policy;
  if (wants_llm) {
    llm::EndpointConfig ep;
    ep.timeout_s = a.llm_timeout;
    ep.use_tools = a.llm_tools;
    if (!a.mock_script.empty()) {
      mock = std::make_unique<llm::MockServer>(llm::load_mock_script_file(a.mock_script));
      ep.url = mock->url();
    } else if (!a.llm_endpoint.empty()) {
      ep.url = a.llm_endpoint;
    } else {
      throw UsageError("--adversary " + a.adversary +
                       " needs --llm-endpoint or --mock-script");
    }
    llm::RoutingPolicy routing{a.llm_model, a.llm_secondary_model};
    llm_policy = std::make_shared<llm::LlmPolicy>(
        std::make_shared<const llm::ChatClient>(ep), routing, telemetry, "llm");
  }
  auto rules = std::make_shared<RulesPolicy>();
  auto random = std::make_shared<RandomPolicy>();
  const llm::MixSchedule schedule{a.llm_fraction, c.seed};
  AdversaryPicker picker = [&](std::uint64_t episode) -> std::shared_ptr<Policy> {
    if (a.adversary == "rules") return rules;
    if (a.adversary == "random") return random;
    if (a.adversary == "llm") return llm_policy;
    return llm::assign_adversary(episode, schedule) == llm::AdversaryKind::kLlm
               ? llm_policy
               : std::shared_ptr<Policy>(rules);
  };

  const fs::path out = a.out;
  json snapshot = c.to_json();
  snapshot["adversary"] = a.adversary;
  snapshot["llm_fraction"] = a.llm_fraction;
  snapshot["party"] = a.party;
  snapshot["enemy"] = a.enemy;
  write_manifest(out, "train", argv, snapshot, c.seed);

  const auto t0 = std::chrono::steady_clock::now();
  TrainResult r = train(c, picker, [&](const TrainProgress& p) {
    if (a.log_every > 0 && (p.iteration + 1) % a.log_every == 0) {
      const double s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0).count();
      std::fprintf(stderr, "iter %5d  frame %8ld  reward %8.3f  episodes %3d  loss %.4f  %.0fs\n",
                   p.iteration + 1, p.frame, p.mean_reward, p.episodes, p.loss, s);
    }
  });
  save_checkpoint(r.checkpoint, out / "checkpoint.json");
  {
    std::ofstream csv(out / "rewards.csv");
    csv << "iteration,mean_reward\n";
    char buf[64];
    for (size_t i = 0; i < r.checkpoint.reward_curve.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, r.checkpoint.reward_curve[i]);
      csv << buf;
    }
  }
  if (wants_llm) telemetry->write_jsonl(out / "telemetry.jsonl");
  std::printf("trained %d iterations, %ld episodes; checkpoint %s\n",
              r.checkpoint.iteration, r.episodes,
              (out / "checkpoint.json").string().c_str());
  return kExitOk;
}

// ----------------------------------------------------------- tournament

struct TournamentArgs {
  std::string roster;
  int fights = 30;
  std::uint64_t seed = 0;
  std::string classes = "fighter";
  std::vector<std::string> maps;
  int max_rounds = kDefaultMaxRounds;
  bool shared_seeds = false;
  int jobs = 1;
  std::string party;
  std::string enemy;
  std::string out = "runs/tournament";
  bool no_logs = false;
};

void add_tournament(CLI::App& app, TournamentArgs& a) {
  app.add_option("--roster", a.roster, "Roster file")->required();
  app.add_option("--fights", a.fights, "Fights per ordered pairing")->capture_default_str();
  app.add_option("--seed", a.seed, "Base seed")->capture_default_str();
  app.add_option("--classes", a.classes, "fighter | four")->capture_default_str();
  app.add_option("--maps", a.maps, "Bundled map names or map files (default: all four)");
  app.add_option("--max-rounds", a.max_rounds, "Round cap per fight")->capture_default_str();
  app.add_flag("--shared-seeds", a.shared_seeds,
               "Replay the same seeds with fixed sides in mirrored cells");
  app.add_option("--jobs", a.jobs, "Worker threads")->capture_default_str();
  app.add_option("--party", a.party, "Hero-side character file");
  app.add_option("--enemy", a.enemy, "Enemy-side character file");
  app.add_option("--out", a.out, "Run directory")->capture_default_str();
  app.add_flag("--no-logs", a.no_logs, "Skip per-fight combat logs");
}

int run_tournament(TournamentArgs& a, const std::string& argv) {
  if (a.fights < 1) throw UsageError("--fights must be at least 1");
  const auto roster = load_roster_file(a.roster);
  TournamentConfig tc;
  tc.fights_per_pair = a.fights;
  tc.seed = a.seed;
  tc.class_mode = parse_class_mode(a.classes);
  tc.map_pool = resolve_maps(a.maps);
  tc.max_rounds = a.max_rounds;
  tc.shared_seeds = a.shared_seeds;
  tc.jobs = a.jobs;
  tc.sheets = resolve_sheets(a.party, a.enemy);
  const fs::path out = a.out;
  if (!a.no_logs) tc.log_dir = out / "logs";

  json roster_json = json::array();
  for (const auto& r : roster) roster_json.push_back(r.to_json());
  json snapshot{{"roster", roster_json},     {"fights", a.fights},
                {"classes", a.classes},      {"maps", a.maps},
                {"max_rounds", a.max_rounds}, {"shared_seeds", a.shared_seeds},
                {"party", a.party},          {"enemy", a.enemy}};
  write_manifest(out, "tournament", argv, snapshot, a.seed);

  PolicyContext ctx;
  ctx.telemetry = std::make_shared<llm::Telemetry>();
  ctx.base_dir = fs::path(a.roster).parent_path();
  const TournamentResult t = round_robin(roster, tc, ctx);
  write_tournament_outputs(t, out);
  if (ctx.telemetry->size() > 0) ctx.telemetry->write_jsonl(out / "telemetry.jsonl");
  std::cout << matrix_text(t) << '\n' << leaderboard_text(leaderboard(t));
  return kExitOk;
}

// --------------------------------------------------------------- replay

struct ReplayArgs {
  std::string log;
  int turn = -1;
  int viewer = 0;
  bool quiet = false;
};

void add_replay(CLI::App& app, ReplayArgs& a) {
  app.add_option("log", a.log, "Combat log")->required();
  app.add_option("--turn", a.turn, "Render only the frame at the start of this turn");
  app.add_option("--viewer", a.viewer, "Entity whose line of sight is drawn (0 hero, 1 enemy)")
      ->capture_default_str();
  app.add_flag("--quiet", a.quiet, "Verify only");
}

void print_frame(const GameState& s, int viewer) {
  std::printf("== turn %d, round %d\n", s.turn, s.round);
  for (const EntityState& e : s.entities) {
    std::printf("   %s %s hp %d/%d at (%d,%d)%s\n",
                e.team == Team::kHero ? "hero " : "enemy", e.sheet->name.c_str(),
                e.hp, e.max_hp(), e.pos.x, e.pos.y,
                e.conditions.dead ? " dead" : (e.conditions.prone ? " prone" : ""));
  }
  std::fputs(render_ascii(s, viewer).c_str(), stdout);
}

int run_replay(ReplayArgs& a) {
  if (a.viewer != 0 && a.viewer != 1) throw UsageError("--viewer must be 0 or 1");
  FightLog log = read_log_file(a.log);
  bool printed = false;
  const GameState initial = new_fight(setup_from_log(log));
  const bool all = a.turn < 0 && !a.quiet;
  if (all || a.turn == 0) {
    print_frame(initial, a.viewer);
    printed = a.turn == 0;
  }
  int last_turn = 0;
  ReplayResult r = replay(log, [&](const GameState& s,
                                   const std::vector<CombatEvent>& events) {
    if (all) {
      for (const CombatEvent& e : events) {
        std::printf("   %s%s\n", e.reaction ? "(reaction) " : "", e.text.c_str());
      }
    }
    if (s.turn != last_turn) {
      last_turn = s.turn;
      if (all || a.turn == s.turn) {
        print_frame(s, a.viewer);
        printed = printed || a.turn == s.turn;
      }
    }
  });
  if (a.turn >= 0 && !printed) {
    throw UsageError("turn " + std::to_string(a.turn) + " is past the end (last turn " +
                     std::to_string(last_turn) + ")");
  }
  std::printf("replay ok: %s after %d rounds, state hash %s\n",
              outcome_name(is_terminal(r.final_state)), log.rounds,
              hash_hex(r.hash).c_str());
  return kExitOk;
}

// ----------------------------------------------------------------- plot

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

Series read_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Series s;
  s.name = fs::path(path).parent_path().filename().string();
  if (s.name.empty()) s.name = fs::path(path).stem().string();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("iteration", 0) == 0) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected two columns");
    }
    try {
      size_t ia = 0, ib = 0;
      s.x.push_back(std::stod(a, &ia));
      s.y.push_back(std::stod(b, &ib));
      if (ia != a.size() || ib != b.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": not a number");
    }
  }
  if (s.x.empty()) throw std::runtime_error(path + ": no data rows");
  return s;
}

std::vector<double> smooth(const std::vector<double>& v, int window) {
  if (window <= 1) return v;
  std::vector<double> out(v.size());
  double sum = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    sum += v[i];
    if (i >= static_cast<size_t>(window)) sum -= v[i - window];
    out[i] = sum / static_cast<double>(std::min<size_t>(i + 1, window));
  }
  return out;
}

std::string ascii_plot(const std::vector<Series>& series, int width, int height) {
  static const char kMarks[] = "*+xo#@%&";
  double x0 = std::numeric_limits<double>::max(), x1 = -x0;
  double y0 = x0, y1 = -x0;
  for (const Series& s : series) {
    for (size_t i = 0; i < s.x.size(); ++i) {
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  std::vector<std::string> grid(height, std::string(width, ' '));
  for (size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    for (size_t i = 0; i < s.x.size(); ++i) {
      const int c = static_cast<int>((s.x[i] - x0) / (x1 - x0) * (width - 1) + 0.5);
      const int r = static_cast<int>((y1 - s.y[i]) / (y1 - y0) * (height - 1) + 0.5);
      grid[r][c] = kMarks[k % 8];
    }
  }
  std::ostringstream out;
  char label[32];
  for (int r = 0; r < height; ++r) {
    const double v = y1 - (y1 - y0) * r / (height - 1);
    std::snprintf(label, sizeof(label), "%9.2f |", v);
    out << label << grid[r] << '\n';
  }
  out << std::string(10, ' ') << '+' << std::string(width, '-') << '\n';
  std::snprintf(label, sizeof(label), "%-10g", x0);
  out << std::string(11, ' ') << label
      << std::string(std::max(0, width - 20), ' ');
  std::snprintf(label, sizeof(label), "%10g", x1);
  out << label << '\n';
  for (size_t k = 0; k < series.size(); ++k) {
    out << "  " << kMarks[k % 8] << ' ' << series[k].name << '\n';
  }
  return out.str();
}

std::string svg_plot(const std::vector<Series>& series) {
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  const double w = 800, h = 450, m = 50;
  double x0 = std::numeric_limits<double>::max(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Series& s : series) {
    for (size_t i = 0; i < s.x.size(); ++i) {
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  auto px = [&](double x) { return m + (x - x0) / (x1 - x0) * (w - 2 * m); };
  auto py = [&](double y) { return h - m - (y - y0) / (y1 - y0) * (h - 2 * m); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << m << "\" y1=\"" << h - m << "\" x2=\"" << w - m << "\" y2=\""
      << h - m << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << m << "\" y1=\"" << m << "\" x2=\"" << m << "\" y2=\"" << h - m
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"" << h - 12
      << "\" text-anchor=\"middle\" font-size=\"12\">iteration</text>\n";
  out << "<text x=\"" << m - 4 << "\" y=\"" << m << "\" text-anchor=\"end\" font-size=\"11\">"
      << y1 << "</text>\n";
  out << "<text x=\"" << m - 4 << "\" y=\"" << h - m
      << "\" text-anchor=\"end\" font-size=\"11\">" << y0 << "</text>\n";
  for (size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    out << "<polyline fill=\"none\" stroke=\"" << kColors[k % 8] << "\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << w - m << "\" y=\"" << m + 16 * k
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << kColors[k % 8] << "\">"
        << s.name << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

struct PlotArgs {
  std::vector<std::string> csvs;
  std::vector<std::string> labels;
  std::string out;
  int width = 72;
  int height = 20;
  int smooth = 1;
};

void add_plot(CLI::App& app, PlotArgs& a) {
  app.add_option("csv", a.csvs, "Reward CSV files (iteration,mean_reward)")->required();
  app.add_option("--label", a.labels, "Curve names, one per CSV");
  app.add_option("--out", a.out, "Write an SVG here instead of drawing text");
  app.add_option("--width", a.width, "Text plot columns")->capture_default_str();
  app.add_option("--height", a.height, "Text plot rows")->capture_default_str();
  app.add_option("--smooth", a.smooth, "Trailing moving-average window")->capture_default_str();
}

int run_plot(PlotArgs& a) {
  if (a.width < 20 || a.height < 5) throw UsageError("plot is too small");
  if (!a.labels.empty() && a.labels.size() != a.csvs.size()) {
    throw UsageError("--label must be given once per CSV");
  }
  std::vector<Series> series;
  for (size_t i = 0; i < a.csvs.size(); ++i) {
    Series s = read_curve(a.csvs[i]);
    if (!a.labels.empty()) s.name = a.labels[i];
    s.y = smooth(s.y, a.smooth);
    series.push_back(std::move(s));
  }
  if (a.out.empty()) {
    std::fputs(ascii_plot(series, a.width, a.height).c_str(), stdout);
  } else {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    out << svg_plot(series);
    std::printf("wrote %s\n", a.out.c_str());
  }
  return kExitOk;
}

// --------------------------------------------------------- validate-map

int run_validate(const std::vector<std::string>& files) {
  int bad = 0;
  for (const std::string& f : files) {
    try {
      const BattleMap m = load_map_file(f);
      std::printf("%s: ok, %dx%d, hero spawn (%d,%d), enemy spawn (%d,%d)\n", f.c_str(),
                  m.width(), m.height(), m.hero_spawn().x, m.hero_spawn().y,
                  m.enemy_spawn().x, m.enemy_spawn().y);
      std::fputs(render_terrain(m).c_str(), stdout);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "%s: %s\n", f.c_str(), e.what());
      ++bad;
    }
  }
  return bad ? kExitRuntime : kExitOk;
}

// ----------------------------------------------------------------- mock

std::atomic<bool> g_stop{false};

int run_mock(const std::string& script, int port, double seconds) {
  llm::MockServer server(llm::load_mock_script_file(script), port);
  std::printf("mock endpoint at %s\n", server.url().c_str());
  std::fflush(stdout);
  std::signal(SIGINT, [](int) { g_stop = true; });
  std::signal(SIGTERM, [](int) { g_stop = true; });
  const auto start = std::chrono::steady_clock::now();
  while (!g_stop) {
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
    if (seconds > 0 && std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start).count() > seconds) {
      break;
    }
  }
  server.stop();
  std::printf("served %zu requests\n", server.requests().size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tactical combat simulation, DQN training and adversary tournaments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(DNDRL_GIT_DESCRIBE));
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "",
                 "TOML/INI file of flag values under [train] / [tournament]; flags win");

  TrainArgs train_args;
  CLI::App* train_cmd = app.add_subcommand("train", "Train a DQN agent");
  add_train(*train_cmd, train_args);

  TournamentArgs tournament_args;
  CLI::App* tournament_cmd = app.add_subcommand("tournament", "Round-robin tournament");
  add_tournament(*tournament_cmd, tournament_args);

  ReplayArgs replay_args;
  CLI::App* replay_cmd = app.add_subcommand("replay", "Re-simulate and render a combat log");
  add_replay(*replay_cmd, replay_args);

  PlotArgs plot_args;
  CLI::App* plot_cmd = app.add_subcommand("plot", "Plot reward curves");
  add_plot(*plot_cmd, plot_args);

  std::vector<std::string> map_files;
  CLI::App* validate_cmd = app.add_subcommand("validate-map", "Check map files");
  validate_cmd->add_option("map", map_files, "Map files")->required();

  std::string mock_script;
  int mock_port = 8000;
  double mock_seconds = 0;
  CLI::App* mock_cmd = app.add_subcommand("mock", "Serve a scripted chat-completions endpoint");
  mock_cmd->add_option("--script", mock_script, "Mock script file")->required();
  mock_cmd->add_option("--port", mock_port, "Port (0 picks one)")->capture_default_str();
  mock_cmd->add_option("--seconds", mock_seconds, "Stop after this long (0: until signalled)");

  // "--config FILE" is accepted after the subcommand too.
  std::vector<std::string> argl(argv + 1, argv + argc);
  for (size_t i = 0; i < argl.size(); ++i) {
    if (argl[i] == "--config" && i + 1 < argl.size()) {
      std::rotate(argl.begin(), argl.begin() + i, argl.begin() + i + 2);
      break;
    }
    if (argl[i].rfind("--config=", 0) == 0) {
      std::rotate(argl.begin(), argl.begin() + i, argl.begin() + i + 1);
      break;
    }
  }
  std::reverse(argl.begin(), argl.end());
  try {
    app.parse(argl);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string args = joined_argv(argc, argv);
  try {
    if (*train_cmd) return run_train(train_args, args);
    if (*tournament_cmd) return run_tournament(tournament_args, args);
    if (*replay_cmd) return run_replay(replay_args);
    if (*plot_cmd) return run_plot(plot_args);
    if (*validate_cmd) return run_validate(map_files);
    if (*mock_cmd) return run_mock(mock_script, mock_port, mock_seconds);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const LogError& e) {
    std::fprintf(stderr, "corrupt log: %s\n", e.what());
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
