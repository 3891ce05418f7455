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

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cogtask/knowledge_base.hpp"
#include "cogtask/lingual.hpp"
#include "cogtask/recipe.hpp"
#include "cogtask/similarity.hpp"
#include "cogtask/task_engine.hpp"
#include "cogtask/world.hpp"

namespace cogtask::interaction {

enum class Intent { skill_started, no_association, missing_object, done };

std::string_view to_string(Intent intent);
std::optional<Intent> parse_intent(std::string_view s);

class TemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Slots = std::map<std::string, std::string>;

/// Replaces every {name} in `tmpl` with slots[name]. Throws TemplateError when
/// a slot has no value or a brace is unmatched.
std::string respond(std::string_view tmpl, const Slots& slots);

class ResponseTemplates {
 public:
  void set(Intent intent, std::string tmpl);
  bool has(Intent intent) const { return templates_.count(intent) > 0; }
  const std::string& get(Intent intent) const;
  /// The {skill} slot is humanized before substitution.
  std::string respond(Intent intent, const Slots& slots) const;

 private:
  std::map<Intent, std::string> templates_;
};

/// `intent<TAB>template` lines; all four intents must be present.
ResponseTemplates parse_templates(std::istream& in, const std::string& source_name = "<templates>");
ResponseTemplates load_templates(const std::string& path);

/// "TeaMaking" -> "Tea Making".
std::string humanize(std::string_view camel);

/// What the pipeline decided before acting.
struct Decision {
  std::string utterance;
  std::vector<std::string> tagged_words;
  std::string winning_object;
  double winning_score = 0.0;
  std::string chosen_skill;
  /// Percentage share per perceived item, in perception order.
  std::vector<similarity::ItemScore> shares;
  std::string note;
};

enum class Status { completed, no_association, unknown_object, stalled };

std::string_view to_string(Status status);

struct InteractionResult {
  Status status = Status::no_association;
  std::vector<std::string> tagged_words;
  std::vector<std::string> perceived;
  similarity::ScoreTable table;
  std::vector<similarity::ItemScore> item_scores;
  std::optional<Decision> decision;
  std::string response;
  engine::ExecutionTrace trace;
};

struct PipelineConfig {
  int radius = 1;
  similarity::Aggregation aggregation = similarity::Aggregation::max;
  std::set<std::string> excluded_categories;
  engine::EngineConfig engine;
  std::uint64_t max_ticks = 1000;
};

struct Resources {
  const kb::KnowledgeBase& kb;
  const recipe::SkillLibrary& skills;
  const lingual::LingualResources& lingual;
  const ResponseTemplates& templates;
};

/// Runs one utterance end to end: tag, perceive, score, choose, execute.
/// The world is only touched after a skill has been chosen. Throws
/// std::invalid_argument for an empty utterance or an empty skill library.
InteractionResult handle_utterance(std::string_view text, const Resources& res,
                                   world::WorldState& world, const PipelineConfig& config = {});

}  // namespace cogtask::interaction
