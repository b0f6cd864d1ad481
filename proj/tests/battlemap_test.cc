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

#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "dndrl/assets.h"
#include "dndrl/battlemap.h"
#include "dndrl/render.h"
#include "test_util.h"

namespace dndrl {
namespace {

const char* kPaperMap2 =
    "E......\n"
    ".......\n"
    ".......\n"
    "..###oo\n"
    ".......\n"
    "....P..\n";

TEST(LoadMap, PaperSecondMap) {
  const BattleMap m = load_map(kPaperMap2);
  EXPECT_EQ(m.width(), 7);
  EXPECT_EQ(m.height(), 6);
  int walls = 0, barrels = 0;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      walls += m.at({x, y}) == Terrain::kWall;
      barrels += m.at({x, y}) == Terrain::kBarrel;
    }
  }
  EXPECT_EQ(walls, 3);
  EXPECT_EQ(barrels, 2);
  EXPECT_EQ(m.enemy_spawn(), (Position{0, 0}));
  EXPECT_EQ(m.hero_spawn(), (Position{4, 5}));
  EXPECT_EQ(load_map(m.to_text()).to_text(), m.to_text());
}

TEST(LoadMap, PlainControlMap) {
  const auto m = bundled_map("plain");
  EXPECT_EQ(m->width(), 8);
  EXPECT_EQ(m->height(), 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) EXPECT_EQ(m->at({x, y}), Terrain::kFloor);
  }
  const std::set<Position> corners = {{0, 0}, {7, 0}, {0, 7}, {7, 7}};
  EXPECT_TRUE(corners.count(m->hero_spawn()));
  EXPECT_TRUE(corners.count(m->enemy_spawn()));
}

TEST(LoadMap, BundledMapsLoad) {
  for (const auto& m : default_map_pool()) {
    EXPECT_GE(m->width(), 6);
    EXPECT_GE(m->height(), 6);
    EXPECT_TRUE(m->passable(m->hero_spawn()));
  }
  EXPECT_NO_THROW(bundled_map("prompt_example"));
  EXPECT_THROW(bundled_map("atlantis"), std::exception);
}

TEST(LoadMap, Errors) {
  EXPECT_THROW(load_map("E.....\n......\n......\n..x...\n......\n.....P\n"), MapError);
  EXPECT_THROW(load_map("E.....\n......\n.....\n......\n......\n.....P\n"), MapError);
  EXPECT_THROW(load_map("......\n......\n......\n......\n......\n.....P\n"), MapError);
  EXPECT_THROW(load_map("E....\n.....\n.....\n.....\n.....\n....P\n"), MapError);
  EXPECT_THROW(load_map("EP....\nP.....\n......\n......\n......\n......\n"), MapError);
}

TEST(LineOfSight, Basics) {
  const BattleMap open = load_map(
      "E.....\n......\n......\n......\n......\n.....P\n");
  EXPECT_EQ(line_of_sight(open, {2, 2}, {3, 2}), Sight::kClear);
  EXPECT_EQ(line_of_sight(open, {0, 0}, {5, 5}), Sight::kClear);
  const BattleMap wall = load_map(
      "E.....\n......\n..#...\n......\n......\n.....P\n");
  EXPECT_EQ(line_of_sight(wall, {0, 2}, {5, 2}), Sight::kBlocked);
  EXPECT_EQ(line_of_sight(wall, {2, 0}, {2, 5}), Sight::kBlocked);
  EXPECT_EQ(line_of_sight(wall, {0, 3}, {5, 3}), Sight::kClear);
}

TEST(LineOfSight, BarrelNextToTargetGivesHalfCover) {
  const BattleMap m = load_map(
      "E.....\n......\n...o..\n......\n......\n.....P\n");
  // Attacker west, barrel immediately west of the target.
  EXPECT_EQ(line_of_sight(m, {0, 2}, {4, 2}), Sight::kHalfCover);
  // Barrel on the line but far from the target.
  EXPECT_EQ(line_of_sight(m, {2, 2}, {5, 2}), Sight::kClear);
  // Barrel behind the target.
  EXPECT_EQ(line_of_sight(m, {0, 2}, {2, 2}), Sight::kClear);
}

TEST(LineOfSight, Symmetric) {
  const BattleMap m = load_map(kPaperMap2);
  for (int a = 0; a < 42; ++a) {
    for (int b = 0; b < 42; ++b) {
      const Position p{a % 7, a / 7}, q{b % 7, b / 7};
      if (m.blocks_sight(p) || m.blocks_sight(q)) continue;
      EXPECT_EQ(line_of_sight(m, p, q) == Sight::kBlocked,
                line_of_sight(m, q, p) == Sight::kBlocked);
    }
  }
}

TEST(MovementCost, Terrain) {
  const BattleMap m = load_map(
      "E_....\n.w....\n......\n......\n......\n.....P\n");
  EXPECT_EQ(movement_budget_cost(m, {0, 0}, {0, 1}), 5);
  EXPECT_EQ(movement_budget_cost(m, {0, 1}, {1, 1}), 10);
  EXPECT_THROW(movement_budget_cost(m, {0, 0}, {1, 0}), MapError);
  EXPECT_THROW(movement_budget_cost(m, {0, 0}, {0, 2}), MapError);
  EXPECT_EQ(try_movement_cost(m, {0, 0}, {1, 0}), -1);
}

TEST(Reachable, ZeroAndFive) {
  const BattleMap m = load_map(
      "E.....\n......\n......\n......\n......\n.....P\n");
  EXPECT_EQ(reachable(m, {2, 2}, 0), (std::vector<Position>{Position{2, 2}}));
  EXPECT_EQ(reachable(m, {2, 2}, 5).size(), 9u);
  const std::vector<Position> occ = {{3, 3}};
  EXPECT_EQ(reachable(m, {2, 2}, 5, occ).size(), 8u);
}

// Exhaustive path enumeration straight from the glyph grid.
std::set<Position> reachable_oracle(const std::vector<std::string>& g,
                                    Position from, int budget) {
  const int h = static_cast<int>(g.size());
  const int w = static_cast<int>(g[0].size());
  auto cell = [&](int x, int y) -> char {
    if (x < 0 || y < 0 || x >= w || y >= h) return '_';
    return g[y][x];
  };
  auto open = [&](int x, int y) {
    const char c = cell(x, y);
    return c == '.' || c == 'w' || c == 'P' || c == 'E';
  };
  std::set<Position> out;
  std::function<void(Position, int)> walk = [&](Position p, int left) {
    out.insert(p);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (!dx && !dy) continue;
        const int nx = p.x + dx, ny = p.y + dy;
        if (!open(nx, ny)) continue;
        if (dx && dy && !open(p.x + dx, p.y) && !open(p.x, p.y + dy)) continue;
        const int cost = cell(nx, ny) == 'w' ? 10 : 5;
        if (cost <= left) walk({nx, ny}, left - cost);
      }
    }
  };
  walk(from, budget);
  return out;
}

TEST(Reachable, WaterStripMatchesPathEnumeration) {
  const std::vector<std::string> g = {"E.....", "......", "wwwwww",
                                      "wwwwww", "......", ".....P"};
  std::string text;
  for (const auto& r : g) text += r + "\n";
  const BattleMap m = load_map(text);
  const auto got = reachable(m, {2, 0}, 25);
  const auto want = reachable_oracle(g, {2, 0}, 25);
  EXPECT_EQ(std::set<Position>(got.begin(), got.end()), want);
  // Crossing both water rows costs 20; row 4 needs 5 ft more to reach from
  // row 1, so row 5 (30 ft) stays out.
  for (const Position& p : got) EXPECT_LT(p.y, 5);
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](Position a, Position b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  }));
}

TEST(Reachable, RandomMapsMatchPathEnumeration) {
  RngStream rng(77);
  const char glyphs[] = {'.', '.', '.', 'w', '#', 'o', '_'};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::string> g(6, std::string(6, '.'));
    for (auto& row : g) {
      for (char& c : row) c = glyphs[rng.uniform_int(0, 6)];
    }
    g[0][0] = 'E';
    g[5][5] = 'P';
    std::string text;
    for (const auto& r : g) text += r + "\n";
    const BattleMap m = load_map(text);
    const Position from{rng.uniform_int(0, 5), rng.uniform_int(0, 5)};
    if (!m.passable(from)) continue;
    const int budget = 5 * rng.uniform_int(0, 5);
    const auto got = reachable(m, from, budget);
    EXPECT_EQ(std::set<Position>(got.begin(), got.end()),
              reachable_oracle(g, from, budget))
        << text << "from " << from.x << "," << from.y << " budget " << budget;
  }
}

TEST(Render, OpenMapShowsEverything) {
  GameState s = testing::make_fight(
      "......\n......\n..P...\n....E.\n......\n......\n",
      CharacterClass::kFighter, CharacterClass::kFighter);
  EXPECT_EQ(render_ascii(s, 0),
            "......\n"
            "......\n"
            "..P...\n"
            "....E.\n"
            "......\n"
            "......\n");
}

TEST(Render, HiddenTilesAreBlankAndWaterIsTilde) {
  GameState s = testing::make_fight(
      "P.#...\n......\n.w....\n......\n......\n.....E\n",
      CharacterClass::kFighter, CharacterClass::kFighter);
  const std::string r = render_ascii(s, 0);
  std::vector<std::string> rows;
  size_t start = 0;
  while (start < r.size()) {
    const size_t nl = r.find('\n', start);
    rows.push_back(r.substr(start, nl - start));
    start = nl + 1;
  }
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0][2], '*');
  EXPECT_EQ(rows[0][3], ' ');  // directly behind the wall
  EXPECT_EQ(rows[2][1], '~');
  EXPECT_EQ(rows[5][5], 'E');
}

TEST(Render, HealthPercent) {
  EXPECT_EQ(format_health_percent(15, 18), "[83.33333333]");
  EXPECT_EQ(format_health_percent(18, 18), "[100.]");
  EXPECT_EQ(format_health_percent(0, 18), "[0.]");
}

}  // namespace
}  // namespace dndrl
