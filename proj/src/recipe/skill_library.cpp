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

#include <algorithm>
#include <filesystem>

#include "cogtask/labels.hpp"
#include "cogtask/recipe.hpp"

namespace cogtask::recipe {

void SkillLibrary::register_skill(const std::string& name, TaskNode tree) {
  if (name.empty()) throw RecipeError("skill name is empty");
  if (skills_.count(name)) throw RecipeError("skill '" + name + "' is already registered");
  if (leaf_objects(tree).empty()) throw RecipeError("skill '" + name + "' has an empty tree");
  validate(tree);
  assign_ids(tree);
  skills_.emplace(name, std::move(tree));
  order_.push_back(name);
  rebuild_index();
}

const TaskNode& SkillLibrary::skill(const std::string& name) const {
  auto it = skills_.find(name);
  if (it == skills_.end()) throw RecipeError("unknown skill '" + name + "'");
  return it->second;
}

void SkillLibrary::rebuild_index() {
  index_.clear();
  for (const auto& [name, tree] : skills_)
    for (auto& obj : leaf_objects(tree)) index_[obj].insert(name);
}

std::vector<std::string> SkillLibrary::skills_for_object(std::string_view object) const {
  std::set<std::string> hits;
  if (auto it = index_.find(std::string(object)); it != index_.end()) {
    hits = it->second;
  } else {
    std::string cat = object_category(object);
    for (const auto& [leaf_name, names] : index_)
      if (object_category(leaf_name) == cat) hits.insert(names.begin(), names.end());
  }
  std::vector<std::string> out;
  for (const auto& n : order_)
    if (hits.count(n)) out.push_back(n);
  return out;
}

SkillLibrary load_skills(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw RecipeError("skills directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".recipe") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  SkillLibrary lib;
  for (const auto& f : files) {
    RecipeFile rf = load_recipe_file(f.string());
    lib.register_skill(rf.skill, std::move(rf.tree));
  }
  return lib;
}

}  // namespace cogtask::recipe
