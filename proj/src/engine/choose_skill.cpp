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

#include "cogtask/task_engine.hpp"

namespace cogtask::engine {

SkillChoice choose_skill(std::span<const similarity::ItemScore> scores,
                         std::span<const std::string> available, const recipe::SkillLibrary& lib) {
  if (available.empty()) throw std::invalid_argument("choose_skill: no available items");

  const std::string* winner = nullptr;
  double best = 0.0;
  int ties = 0;
  for (const auto& item : available) {
    const similarity::ItemScore* s = similarity::find_score(scores, item);
    if (!s) throw std::invalid_argument("choose_skill: no score for '" + item + "'");
    if (!winner || s->score > best) {
      winner = &item;
      best = s->score;
      ties = 1;
    } else if (s->score == best) {
      ++ties;
    }
  }
  if (!(best > 0.0)) throw similarity::NoAssociation();

  SkillChoice choice;
  choice.object = *winner;
  choice.score = best;
  if (ties > 1) choice.note = "tie=first_listed";

  auto skills = lib.skills_for_object(*winner);
  if (skills.empty()) throw UnknownObject(*winner);
  choice.skill = skills.front();
  if (skills.size() > 1) {
    std::string all;
    for (const auto& s : skills) all += (all.empty() ? "" : ",") + s;
    choice.note += std::string(choice.note.empty() ? "" : " ") + "ambiguous=" + all +
                   " resolved=registration_order";
  }
  return choice;
}

}  // namespace cogtask::engine
