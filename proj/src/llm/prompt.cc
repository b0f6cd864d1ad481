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

#include "dndrl/llm/prompt.h"

#include <stdexcept>

#include "dndrl/render.h"

namespace dndrl::llm {

const std::string_view kLegend =
    "areas with no characters are represented\n"
    "by a dot (.)\n"
    "the hero character is represented by\n"
    "a (P)\n"
    "the enemy character is represented by\n"
    "an (E)\n"
    "Allies or Party Members are represented by an (A)\n"
    "Neutral characters are represented by\n"
    "a question mark (?)\n"
    "areas outside of the map are represented by a hash (_),\n"
    "you\n"
    "cannot move to areas with _\n"
    "areas with obstacles are represented by an asterisk (*)\n"
    "areas with a barrel are represented by an (o).\n"
    "These provide half-cover if right behind it and\n"
    "attacks are comming from the other side.\n"
    "areas with water are represented by a tilde (~) and\n"
    "are difficult terrain\n"
    "areas that the player can't see are just blanks/space\n"
    "Each tile of the map is 5ft by 5ft.\n";

const std::string_view kAnswerInstruction =
    "Please choose the number corresponding to the action\n"
    "you would like to take.\n"
    "Provide your answer using the format, starting with\n"
    "the desired number choice, followed by the\n"
    "colon and the action.\n"
    "1: attack enemy with ranged weapon\n"
    "Just provide the action choice, no need to explain.\n";

namespace {

std::vector<std::string> conditions_of(const EntityState& e) {
  std::vector<std::string> out;
  if (e.conditions.prone) out.push_back("prone");
  if (e.conditions.dodging) out.push_back("dodging");
  if (e.conditions.shielded) out.push_back("shielded");
  if (e.conditions.dead) out.push_back("dead");
  return out;
}

std::string join_conditions(const std::vector<std::string>& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += c[i];
  }
  return out;
}

}  // namespace

PromptContext make_context(const GameState& state, int pov) {
  const EntityState& me = state.entity(pov);
  if (!me.alive()) throw std::invalid_argument("prompt for a dead entity");
  if (state.active_id() != pov) {
    throw std::invalid_argument("prompt for an entity whose turn it is not");
  }
  const auto enemies = state.enemies_of(pov);
  if (enemies.empty()) throw std::invalid_argument("prompt without an enemy");
  const EntityState& enemy = state.entity(enemies.front());

  PromptContext c;
  c.pov = pov;
  c.own_class = std::string(class_key(me.character_class()));
  c.enemy_class = std::string(class_key(enemy.character_class()));
  c.own_health = format_health_percent(me.hp, me.max_hp());
  c.own_hp = me.hp;
  c.own_max_hp = me.max_hp();
  c.enemy_health = format_health_percent(enemy.hp, enemy.max_hp());
  c.own_conditions = conditions_of(me);
  c.enemy_conditions = conditions_of(enemy);
  c.movement = me.economy.movement_left;
  c.actions = me.economy.actions;
  c.bonus_actions = me.economy.bonus_actions;
  c.reactions = me.economy.reactions;
  c.map = render_ascii(state, pov);
  const auto actions = enumerate_actions(state);
  for (size_t i = 0; i < actions.size(); ++i) {
    c.menu.push_back(std::to_string(i) + ": " + describe_action(state, actions[i]));
  }
  return c;
}

std::string render_prompt(const PromptContext& c) {
  std::string p;
  p += "We are playing a game of Dungeons and\n";
  p += "Dragons\n";
  p += "5th Edition. It is current your turn and\n";
  p += "you play \n";
  p += "as a hero character denoted by P\n";
  p += "(a level 2 " + c.own_class + ").\n";
  p += "And you have an enemy donoted\n";
  p += "by E (a level 2 " + c.enemy_class + ")\n";
  p += "which you must defeat. \n";
  p += "Your health is at " + c.own_health + "%\n";
  p += "specifically " + std::to_string(c.own_hp) + "/" +
       std::to_string(c.own_max_hp) + " \n";
  p += "Your Enemies health is at " + c.enemy_health + "%\n";
  p += "Your current conditions are:" + join_conditions(c.own_conditions) + "\n";
  p += "Your enemies current conditions are:" +
       join_conditions(c.enemy_conditions) + "\n";
  p += "You have the following available actions\n";
  p += "and movement available:\n";
  p += "\n";
  p += "Available movement: [" + std::to_string(c.movement) + "]ft\n";
  p += "Available actions: " + std::to_string(c.actions) + "\n";
  p += "Bonus actions: " + std::to_string(c.bonus_actions) + "\n";
  p += "Reactions: " + std::to_string(c.reactions) + "\n";
  p += "\n";
  p += "Here is a rough sketch of the map that\n";
  p += "considers line of sight to the enemy.\n";
  p += "Here is the map:\n";
  p += c.map;
  p += kLegend;
  p += "\n";
  p += "Here are the available actions you can take,\n";
  p += "please choose the number corresponding to the action:\n";
  for (const std::string& line : c.menu) p += line + "\n";
  p += "\n";
  p += kAnswerInstruction;
  return p;
}

std::string build_prompt(const GameState& state, int pov) {
  return render_prompt(make_context(state, pov));
}

}  // namespace dndrl::llm
