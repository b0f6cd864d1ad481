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

#include <map>

#include <gtest/gtest.h>

#include "dndrl/dice.h"
#include "dndrl/render.h"
#include "dndrl/rules.h"
#include "test_util.h"

namespace dndrl {
namespace {

using testing::make_fight;

const char* kOpen =
    "E.......\n"
    "........\n"
    "........\n"
    "........\n"
    "........\n"
    "........\n"
    "........\n"
    ".......P\n";

TEST(Rng, SameSeedSameStream) {
  RngStream a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(roll(RollSpec(3, 6, 2), a), roll(RollSpec(3, 6, 2), b));
}

TEST(Rng, SplitDoesNotAdvanceParent) {
  RngStream a(7);
  const auto before = a.position();
  RngStream child = a.split(3);
  EXPECT_EQ(a.position(), before);
  EXPECT_NE(child.next_u64(), RngStream(7).next_u64());
}

TEST(Rng, UniformIntChiSquare) {
  RngStream rng(2024);
  constexpr int kSides = 20;
  constexpr int kDraws = 20000;
  std::array<int, kSides> counts{};
  for (int i = 0; i < kDraws; ++i) ++counts[rng.uniform_int(1, kSides) - 1];
  double chi2 = 0;
  const double expected = static_cast<double>(kDraws) / kSides;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 19 degrees of freedom, p = 0.01.
  EXPECT_LT(chi2, 36.19);
}

TEST(Dice, ForcedD20PlusFive) {
  RngStream rng(1);
  rng.force({10});
  EXPECT_EQ(roll(RollSpec(1, 20, 5), rng), 15);
}

TEST(Dice, LowerBound) {
  RngStream rng(1);
  rng.force({1, 1});
  const DiceRoll r = roll_detailed(RollSpec(2, 6), rng);
  EXPECT_EQ(r.total, 2);
  EXPECT_EQ(r.total, RollSpec(2, 6).min());
}

TEST(Dice, CriticalDoublesDiceNotModifier) {
  RngStream rng(1);
  rng.force({4, 5});
  const DiceRoll r = roll_detailed(RollSpec(1, 8, 3), rng, true);
  EXPECT_EQ(r.faces.size(), 2u);
  EXPECT_EQ(r.total, 4 + 5 + 3);
}

TEST(Dice, RangeOverManyRolls) {
  RngStream rng(9);
  const RollSpec spec(2, 10, -1);
  for (int i = 0; i < 2000; ++i) {
    const int v = roll(spec, rng);
    EXPECT_GE(v, spec.min());
    EXPECT_LE(v, spec.max());
  }
}

TEST(Dice, RejectsNonStandardDice) {
  EXPECT_THROW(RollSpec(1, 7), std::invalid_argument);
  EXPECT_THROW(RollSpec(0, 6), std::invalid_argument);
}

TEST(AbilityModifier, MatchesSrdTable) {
  // Score -> modifier table as printed in the SRD.
  const std::map<int, int> table = {
      {1, -5},  {2, -4},  {3, -4},  {4, -3},  {5, -3},  {6, -2},
      {7, -2},  {8, -1},  {9, -1},  {10, 0},  {11, 0},  {12, 1},
      {13, 1},  {14, 2},  {15, 2},  {16, 3},  {17, 3},  {18, 4},
      {19, 4},  {20, 5},  {21, 5},  {22, 6},  {23, 6},  {24, 7},
      {25, 7},  {26, 8},  {27, 8},  {28, 9},  {29, 9},  {30, 10}};
  for (const auto& [score, mod] : table) {
    EXPECT_EQ(ability_modifier(score), mod) << "score " << score;
  }
  EXPECT_THROW(ability_modifier(0), std::out_of_range);
  EXPECT_THROW(ability_modifier(31), std::out_of_range);
}

TEST(D20, AdvantageTakesHigher) {
  RngStream rng(1);
  rng.force({3, 17});
  EXPECT_EQ(roll_d20(0, Advantage::kAdvantage, rng).natural, 17);
  rng.force({3, 17});
  EXPECT_EQ(roll_d20(0, Advantage::kDisadvantage, rng).natural, 3);
  EXPECT_EQ(combine_advantage(true, true), Advantage::kNormal);
  EXPECT_EQ(combine_advantage(true, false), Advantage::kAdvantage);
  EXPECT_EQ(combine_advantage(false, true), Advantage::kDisadvantage);
}

TEST(Attack, GomRapierHitsCrysOnFive) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kWizard);
  s.entity(0).pos = {3, 3};
  s.entity(1).pos = {4, 3};
  const EntityState& gom = s.entity(0);
  const EntityState& crys = s.entity(1);
  const Weapon& rapier = weapon(WeaponId::kRapier);
  // Finesse: proficiency 2 + DEX 20 (+5).
  EXPECT_EQ(weapon_attack_bonus(*gom.sheet, rapier, AttackMode::kMelee), 7);
  EXPECT_EQ(crys.armor_class(), 12);
  RngStream rng(1);
  rng.force({5});
  const AttackResult r =
      attack_roll(gom, crys, rapier, AttackMode::kMelee, Sight::kClear, rng);
  EXPECT_EQ(r.roll.total, 12);
  EXPECT_TRUE(r.hit);
  rng.force({4});
  EXPECT_FALSE(
      attack_roll(gom, crys, rapier, AttackMode::kMelee, Sight::kClear, rng).hit);
}

TEST(Attack, NaturalOneAlwaysMisses) {
  RngStream rng(1);
  rng.force({1});
  const AttackResult r = resolve_attack(99, 10, Sight::kClear, Advantage::kNormal, rng);
  EXPECT_TRUE(r.roll.critical_miss);
  EXPECT_FALSE(r.hit);
}

TEST(Attack, NaturalTwentyAlwaysHits) {
  RngStream rng(1);
  rng.force({20});
  const AttackResult r = resolve_attack(-5, 30, Sight::kClear, Advantage::kNormal, rng);
  EXPECT_TRUE(r.roll.critical_hit);
  EXPECT_TRUE(r.hit);
}

TEST(Attack, HalfCoverAddsTwoToAc) {
  EXPECT_EQ(cover_ac_bonus(Sight::kHalfCover), 2);
  EXPECT_EQ(cover_ac_bonus(Sight::kClear), 0);
  RngStream rng(1);
  // Total exactly AC + 1.
  rng.force({13});
  EXPECT_FALSE(resolve_attack(0, 12, Sight::kHalfCover, Advantage::kNormal, rng).hit);
  rng.force({13});
  EXPECT_TRUE(resolve_attack(0, 12, Sight::kClear, Advantage::kNormal, rng).hit);
  rng.force({14});
  EXPECT_TRUE(resolve_attack(0, 12, Sight::kHalfCover, Advantage::kNormal, rng).hit);
}

TEST(Attack, OutOfRangeIsIllegal) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kWizard);
  s.entity(0).pos = {0, 7};
  s.entity(1).pos = {7, 0};
  RngStream rng(1);
  EXPECT_THROW(attack_roll(s.entity(0), s.entity(1), weapon(WeaponId::kRapier),
                           AttackMode::kMelee, Sight::kClear, rng),
               IllegalActionError);
}

TEST(Advantage, ConditionsAndRange) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kWizard);
  EntityState& a = s.entity(0);
  EntityState& t = s.entity(1);
  a.pos = {3, 3};
  t.pos = {4, 3};
  const int bow = weapon(WeaponId::kLongbow).normal_range;
  EXPECT_EQ(attack_advantage(a, t, AttackMode::kMelee, 5), Advantage::kNormal);
  // Ranged attack with an enemy adjacent.
  EXPECT_EQ(attack_advantage(a, t, AttackMode::kRanged, bow), Advantage::kDisadvantage);
  t.conditions.prone = true;
  EXPECT_EQ(attack_advantage(a, t, AttackMode::kMelee, 5), Advantage::kAdvantage);
  t.conditions.prone = false;
  t.conditions.dodging = true;
  EXPECT_EQ(attack_advantage(a, t, AttackMode::kMelee, 5), Advantage::kDisadvantage);
  t.conditions.dodging = false;
  a.conditions.prone = true;
  EXPECT_EQ(attack_advantage(a, t, AttackMode::kMelee, 5), Advantage::kDisadvantage);
}

TEST(Save, BoundaryPasses) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kCleric);
  // Shor: DEX 10, not a cleric save proficiency -> +0.
  RngStream rng(1);
  rng.force({10});
  const SaveResult r = saving_throw(s.entity(1), Ability::kDex, 10, rng);
  EXPECT_EQ(r.bonus, 0);
  EXPECT_TRUE(r.passed);
  rng.force({9});
  EXPECT_FALSE(saving_throw(s.entity(1), Ability::kDex, 10, rng).passed);
}

TEST(Save, ShorWisdomAgainstThirteen) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kCleric);
  const EntityState& shor = s.entity(1);
  EXPECT_EQ(shor.sheet->modifier(Ability::kWis), 3);
  RngStream rng(1);
  rng.force({10});
  const SaveResult r = saving_throw(shor, Ability::kWis, 13, rng);
  // Clerics are proficient in Wisdom saves: +3 + 2.
  EXPECT_EQ(r.bonus, 5);
  EXPECT_EQ(r.roll.total, 15);
  EXPECT_TRUE(r.passed);
}

TEST(Save, NaturalTwentyIsNotAutomatic) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kWizard);
  RngStream rng(1);
  rng.force({20});
  const SaveResult r = saving_throw(s.entity(1), Ability::kDex, 30, rng);
  EXPECT_LT(r.roll.total, 30);
  EXPECT_FALSE(r.passed);
}

TEST(Damage, IdentityFloorAndDeath) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kRogue);
  EntityState e = s.entity(1);
  e.hp = 15;
  EXPECT_EQ(apply_damage(e, 0, DamageType::kPiercing).hp, 15);
  const EntityState dead = apply_damage(e, 20, DamageType::kPiercing);
  EXPECT_EQ(dead.hp, 0);
  EXPECT_TRUE(dead.conditions.dead);
  EXPECT_FALSE(dead.alive());
}

TEST(Damage, CrysHalfHealthLine) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kWizard);
  const EntityState crys = apply_damage(s.entity(1), 7, DamageType::kFire);
  EXPECT_EQ(crys.hp, 7);
  EXPECT_EQ(crys.max_hp(), 14);
  EXPECT_EQ(format_health_percent(crys.hp, crys.max_hp()), "[50.]");
}

TEST(Healing, CappedAtMax) {
  GameState s = make_fight(kOpen, CharacterClass::kFighter, CharacterClass::kWizard);
  EntityState e = s.entity(1);
  e.hp = 10;
  EXPECT_EQ(apply_healing(e, 100).hp, 14);
}

}  // namespace
}  // namespace dndrl
