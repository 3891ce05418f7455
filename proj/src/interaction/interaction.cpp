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

#include "cogtask/interaction.hpp"

#include "cogtask/labels.hpp"

namespace cogtask::interaction {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::completed: return "completed";
    case Status::no_association: return "no_association";
    case Status::unknown_object: return "unknown_object";
    case Status::stalled: return "stalled";
  }
  return "?";
}

InteractionResult handle_utterance(std::string_view text, const Resources& res,
                                   world::WorldState& world, const PipelineConfig& config) {
  lingual::Utterance utterance = lingual::make_utterance(std::string(text), world.clock());
  if (res.skills.empty()) throw std::invalid_argument("no skills loaded");

  InteractionResult result;
  for (const auto& w : lingual::analyze(utterance.text, res.lingual)) result.tagged_words.push_back(w.lemma);
  for (const auto& p : world.perceive()) result.perceived.push_back(p.name);

  auto no_association = [&](Status status) {
    result.status = status;
    result.response = res.templates.respond(Intent::no_association, {});
    return result;
  };
  if (result.perceived.empty()) return no_association(Status::no_association);

  similarity::SignatureOptions sig{config.radius, config.excluded_categories};
  result.table = similarity::score_matrix(res.kb, result.tagged_words, result.perceived, sig);
  result.item_scores = similarity::aggregate(result.table, config.aggregation);

  // Decide before acting: nothing below touches the world until a skill is fixed.
  engine::SkillChoice choice;
  try {
    choice = engine::choose_skill(result.item_scores, result.perceived, res.skills);
  } catch (const similarity::NoAssociation&) {
    return no_association(Status::no_association);
  } catch (const engine::UnknownObject&) {
    return no_association(Status::unknown_object);
  }

  Decision d;
  d.utterance = utterance.text;
  d.tagged_words = result.tagged_words;
  d.winning_object = choice.object;
  d.winning_score = choice.score;
  d.chosen_skill = choice.skill;
  d.note = choice.note;
  d.shares = similarity::normalized_shares(result.item_scores, result.perceived);

  engine::TaskInstance instance = engine::TaskInstance::for_world(res.skills, world, config.engine);
  std::string detail = "object=" + choice.object + " score=" + similarity::format_score(choice.score);
  if (!choice.note.empty()) detail += " " + choice.note;
  instance.choose(choice.skill, detail);
  result.trace = engine::run_until_done(instance, world, config.max_ticks);

  Slots slots{{"skill", choice.skill}};
  std::string response = res.templates.respond(Intent::skill_started, slots);
  if (result.trace.outcome == engine::Outcome::completed) {
    result.status = Status::completed;
    response += " " + res.templates.respond(Intent::done, slots);
  } else {
    result.status = Status::stalled;
    std::string missing;
    for (const auto& m : result.trace.missing_objects) missing += (missing.empty() ? "" : " and the ") + m;
    slots["object"] = missing.empty() ? "objects I need" : missing;
    response += " " + res.templates.respond(Intent::missing_object, slots);
  }
  result.response = std::move(response);
  result.decision = std::move(d);
  return result;
}

}  // namespace cogtask::interaction
