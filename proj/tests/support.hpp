// Copyright 2026 The cogtask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Shared fixtures and trace helpers for the test binaries.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cogtask/interaction.hpp"
#include "cogtask/knowledge_base.hpp"
#include "cogtask/lingual.hpp"
#include "cogtask/recipe.hpp"
#include "cogtask/similarity.hpp"
#include "cogtask/task_engine.hpp"
#include "cogtask/trace.hpp"
#include "cogtask/world.hpp"

namespace cogtask::testing {

inline std::string data_path(const std::string& rel) { return std::string(COGTASK_DATA_DIR) + "/" + rel; }
inline std::string fixture_path(const std::string& rel) {
  return std::string(COGTASK_TEST_FIXTURES) + "/" + rel;
}
inline std::string kb_path() { return data_path("kb/semantic_memory.tsv"); }
inline std::string scenario_path(const std::string& name) { return data_path("scenarios/" + name + ".scn"); }

inline const kb::KnowledgeBase& fixture_kb() {
  static const kb::KnowledgeBase kb = kb::load_kb(kb_path());
  return kb;
}
inline const recipe::SkillLibrary& shipped_skills() {
  static const recipe::SkillLibrary lib = recipe::load_skills(data_path("skills"));
  return lib;
}
inline const lingual::LingualResources& lingual_resources() {
  static const lingual::LingualResources res = lingual::LingualResources::load(data_path("lingual"));
  return res;
}
inline const interaction::ResponseTemplates& templates() {
  static const interaction::ResponseTemplates t = interaction::load_templates(data_path("nlg/templates.tsv"));
  return t;
}
inline interaction::Resources resources() {
  return {fixture_kb(), shipped_skills(), lingual_resources(), templates()};
}

inline const std::vector<std::string>& shipped_scenarios() {
  static const std::vector<std::string> names{"tea_1", "tea_2", "tea_3", "sandwich_1", "sandwich_2", "sandwich_3"};
  return names;
}

inline world::WorldState scenario(const std::string& name) { return world::load_scenario(scenario_path(name)); }

inline const char* const kTeaRecipe = "((PicknPlace Cup) THEN ((PicknPlace Tea) AND (PicknPlace Sugar)))";
inline const char* const kSandwichRecipe =
    "((PicknPlace Bread1) THEN ((PicknPlace Meat) OR (PicknPlace Lettuce)) THEN (PicknPlace Bread2))";

inline recipe::SkillLibrary tea_and_sandwich() {
  recipe::SkillLibrary lib;
  lib.register_skill("TeaMaking", recipe::parse_recipe(kTeaRecipe));
  lib.register_skill("SandwichMaking", recipe::parse_recipe(kSandwichRecipe));
  return lib;
}

// --- reference similarity scores ------------------------------------------------

inline const std::array<std::string, 8>& reference_items() {
  static const std::array<std::string, 8> items{"Bread", "Cheese", "Cup", "Lettuce",
                                                "Meat",  "Sugar",  "Tea", "Teapot"};
  return items;
}

struct ReferenceRow {
  std::string word;
  std::array<double, 8> scores;
};

inline const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows{
      {"Hot", {0.0080249, 0.0043135, 0.0049332, 0.0023202, 0.0069543, 0.0065621, 0.0116331, 0.0011587}},
      {"Hungry", {0.0006277, 0.0000000, 0.0000000, 0.0000000, 0.0034459, 0.0000000, 0.0000000, 0.0000000}},
      {"Thirst", {0.0012563, 0.0000000, 0.0057803, 0.0052356, 0.0006873, 0.0000000, 0.0051282, 0.0000000}},
      {"Sandwich", {0.0224423, 0.0160966, 0.0065459, 0.0178571, 0.0176075, 0.0026882, 0.0108120, 0.0021978}},
      {"Drink", {0.0100839, 0.0046816, 0.0175440, 0.0032726, 0.0074370, 0.0154660, 0.0146541, 0.0013999}},
      {"Food", {0.0287881, 0.0090561, 0.0068393, 0.0048706, 0.0253697, 0.0132474, 0.0080704, 0.0002427}},
      {"Burger", {0.0044108, 0.0029791, 0.0000000, 0.0068027, 0.0111111, 0.0004470, 0.0000000, 0.0000000}},
      {"Coffee", {0.0025157, 0.0033104, 0.0233112, 0.0053050, 0.0048309, 0.0062926, 0.0588923, 0.0066401}},
      {"Cold", {0.0055744, 0.0054682, 0.0035714, 0.0026762, 0.0061406, 0.0026882, 0.0115401, 0.0000000}},
  };
  return rows;
}

inline std::vector<similarity::ItemScore> reference_scores(const std::string& word) {
  for (const auto& r : reference_rows()) {
    if (r.word != word) continue;
    std::vector<similarity::ItemScore> out;
    for (std::size_t i = 0; i < 8; ++i) out.push_back({reference_items()[i], r.scores[i]});
    return out;
  }
  throw std::out_of_range("no reference row " + word);
}

// --- independent knowledge-file oracle --------------------------------------------

inline std::string lower_trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  s.erase(0, i);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Triples read straight from the TSV, without the library loader.
struct RawTriples {
  std::vector<std::pair<std::string, std::string>> edges;  // (source, target)
  std::set<std::string> labels;
};

inline RawTriples read_raw_triples(const std::string& path) {
  RawTriples raw;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == '@') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) f.push_back(cell);
    if (f.size() < 3) continue;
    std::string s = lower_trim(f[0]), t = lower_trim(f[2]);
    raw.edges.emplace_back(s, t);
    raw.labels.insert(s);
    raw.labels.insert(t);
  }
  return raw;
}

// Term plus everything within `radius` hops, by repeated full edge scans.
inline std::set<std::string> brute_signature(const RawTriples& raw, const std::string& term, int radius) {
  std::set<std::string> members{term};
  std::set<std::string> frontier{term};
  for (int r = 0; r < radius; ++r) {
    std::set<std::string> next;
    for (const auto& [s, t] : raw.edges) {
      if (frontier.count(s) && !members.count(t)) next.insert(t);
      if (frontier.count(t) && !members.count(s)) next.insert(s);
    }
    members.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return members;
}

inline double brute_jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::vector<std::string> inter, uni;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
  if (uni.empty()) return 0.0;
  return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

// Item columns are scored by category: "Bread1" reads as "bread".
inline std::string brute_category(std::string item) {
  while (!item.empty() && std::isdigit(static_cast<unsigned char>(item.back()))) item.pop_back();
  return lower_trim(item);
}

// --- trace helpers -----------------------------------------------------------------

inline std::vector<std::string> nodes_with(const engine::ExecutionTrace& t, engine::EventKind kind) {
  std::vector<std::string> out;
  for (const auto& e : t.events)
    if (e.event == kind) out.push_back(e.node);
  return out;
}

inline std::vector<std::string> completion_order(const engine::ExecutionTrace& t) {
  return nodes_with(t, engine::EventKind::action_done);
}

inline std::vector<std::string> claim_order(const engine::ExecutionTrace& t) {
  return nodes_with(t, engine::EventKind::claimed);
}

// First tick at which `node` logged `kind`, or -1.
inline long long first_tick(const engine::ExecutionTrace& t, const std::string& node, engine::EventKind kind) {
  for (const auto& e : t.events)
    if (e.node == node && e.event == kind) return static_cast<long long>(e.tick);
  return -1;
}

inline engine::ExecutionTrace run_skill(const recipe::SkillLibrary& lib, world::WorldState& world,
                                        const std::string& skill, engine::EngineConfig cfg = {},
                                        std::uint64_t max_ticks = 1000) {
  auto inst = engine::TaskInstance::for_world(lib, world, cfg);
  inst.choose(skill);
  return engine::run_until_done(inst, world, max_ticks);
}

}  // namespace cogtask::testing
