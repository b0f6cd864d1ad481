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

// Runs the command-line tool as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int status = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dndrl_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args) {
    const fs::path capture = dir_ / "stdout.txt";
    const std::string cmd = std::string("\"") + DNDRL_CLI_PATH + "\" " + args +
                            " > \"" + capture.string() + "\" 2>&1";
    Result r;
    const int raw = std::system(cmd.c_str());
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(capture);
    return r;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string data(const std::string& rel) {
    return (fs::path(DNDRL_TEST_DIR).parent_path() / "data" / rel).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, TrainSmokeRun) {
  const Result r = run("train --iterations 10 --horizon 64 --batch-size 16 --buffer-size 256 "
                    "--log-every 0 --out " + path("run"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(fs::exists(path("run/checkpoint.json")));
  EXPECT_TRUE(fs::exists(path("run/manifest.json")));
  const std::string csv = slurp(path("run/rewards.csv"));
  EXPECT_EQ(csv.rfind("iteration,mean_reward\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
}

TEST_F(CliTest, TrainConfigFileAndPrecedence) {
  std::ofstream(path("cfg.toml")) << "[train]\niterations = 3\nhorizon = 32\n"
                                     "batch-size = 8\nbuffer-size = 64\nlog-every = 0\n";
  const Result r = run("train --config " + path("cfg.toml") + " --iterations 4 --out " +
                    path("run"));
  ASSERT_EQ(r.status, 0) << r.out;
  const std::string csv = slurp(path("run/rewards.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);  // flag beats file
}

TEST_F(CliTest, TrainRejectsBadValues) {
  EXPECT_EQ(run("train --classes wizard --out " + path("run")).status, 1);
  EXPECT_EQ(run("train --iterations -5 --out " + path("run")).status, 1);
}

TEST_F(CliTest, TrainAgainstMockScript) {
  std::ofstream(path("mock.json")) << R"([{"reply": "0: end my turn"}])";
  const Result r = run("train --iterations 2 --horizon 32 --batch-size 8 --buffer-size 64 "
                    "--log-every 0 --adversary mixed --llm-fraction 1 --mock-script " +
                    path("mock.json") + " --out " + path("run"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_FALSE(slurp(path("run/telemetry.jsonl")).empty());
}

TEST_F(CliTest, TournamentFighterAndFourClasses) {
  const std::string roster = data("rosters/baselines.json");
  Result r = run("tournament --roster " + roster + " --fights 5 --seed 3 --out " + path("t1"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("AVG Rounds"), std::string::npos);
  for (const char* f : {"matrix.csv", "leaderboard.csv", "fights.csv"}) {
    EXPECT_TRUE(fs::exists(path(std::string("t1/") + f))) << f;
  }
  r = run("tournament --roster " + roster + " --fights 5 --classes four --no-logs --out " +
          path("t2"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(slurp(path("t2/fights.csv")).find("wizard"), std::string::npos);
  EXPECT_EQ(run("tournament --fights 5").status, 1);  // roster is required
}

TEST_F(CliTest, ReplayGoodTruncatedAndTurn) {
  const Result t = run("tournament --roster " + data("rosters/baselines.json") +
                    " --fights 1 --out " + path("t"));
  ASSERT_EQ(t.status, 0) << t.out;
  fs::path log;
  for (const auto& e : fs::directory_iterator(path("t/logs"))) log = e.path();
  ASSERT_FALSE(log.empty());

  Result r = run("replay " + log.string() + " --quiet");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("replay ok"), std::string::npos);

  r = run("replay " + log.string() + " --turn 5");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("== turn 5"), std::string::npos);
  EXPECT_EQ(run("replay " + log.string() + " --turn 100000").status, 1);

  std::ifstream in(log);
  std::ofstream cut(path("cut.jsonl"));
  std::string line;
  std::getline(in, line);
  cut << line << '\n';
  std::getline(in, line);
  cut << line << '\n';
  cut.close();
  r = run("replay " + path("cut.jsonl"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("truncated"), std::string::npos);
}

TEST_F(CliTest, PlotAsciiSvgAndEmpty) {
  std::ofstream(path("a.csv")) << "iteration,mean_reward\n0,-5\n1,-2\n2,1\n3,4\n";
  std::ofstream(path("b.csv")) << "iteration,mean_reward\n0,0\n1,1\n2,2\n3,3\n";
  Result r = run("plot " + path("a.csv") + " " + path("b.csv"));
  EXPECT_EQ(r.status, 0) << r.out;
  r = run("plot " + path("a.csv") + " --out " + path("p.svg"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(slurp(path("p.svg")).find("<svg"), std::string::npos);
  std::ofstream(path("empty.csv")) << "iteration,mean_reward\n";
  EXPECT_EQ(run("plot " + path("empty.csv")).status, 2);
}

TEST_F(CliTest, ValidateMap) {
  EXPECT_EQ(run("validate-map " + data("maps/plain.txt") + " " + data("maps/ruins.txt")).status, 0);
  std::ofstream(path("bad.txt")) << "P..\n...\n";
  const Result r = run("validate-map " + path("bad.txt"));
  EXPECT_EQ(r.status, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("train --no-such-flag").status, 1);
  EXPECT_EQ(run("--help").status, 0);
  const Result v = run("--version");
  EXPECT_EQ(v.status, 0);
  EXPECT_FALSE(v.out.empty());
}

}  // namespace
