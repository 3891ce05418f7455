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

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cogtask::recipe {

enum class NodeKind { skill_root, skill, then_node, and_node, or_node, object_leaf };
enum class Action { pick_n_place };

std::string_view to_string(NodeKind kind);
std::string_view to_string(Action action);
std::optional<Action> parse_action(std::string_view verb);

/// Recipe tree node. `name` is the skill name for skill nodes and the object
/// name for leaves; `id` is the preorder index within the tree it was built in.
struct TaskNode {
  NodeKind kind = NodeKind::object_leaf;
  std::string name;
  Action action = Action::pick_n_place;
  std::vector<TaskNode> children;
  int id = 0;

  bool operator==(const TaskNode&) const = default;
};

TaskNode leaf(std::string object, Action action = Action::pick_n_place);
TaskNode then_node(std::vector<TaskNode> children);
TaskNode and_node(std::vector<TaskNode> children);
TaskNode or_node(std::vector<TaskNode> children);
TaskNode skill_node(std::string name, TaskNode body);
TaskNode skill_root(std::vector<TaskNode> skills);

/// Renumbers ids in preorder starting at `first`; returns the next free id.
int assign_ids(TaskNode& node, int first = 0);

std::size_t node_count(const TaskNode& node);

/// Object names of every leaf, left to right.
std::vector<std::string> leaf_objects(const TaskNode& node);

/// Checks arity and placement rules; throws RecipeError on violation.
void validate(const TaskNode& node);

class RecipeError : public std::runtime_error {
 public:
  RecipeError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  explicit RecipeError(const std::string& what)
      : std::runtime_error(what), position_(std::string::npos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr := leaf | '(' expr (OP expr)+ ')'      one OP kind per level
///   leaf := '(' ACTION IDENT ')'
///   OP   := THEN | AND | OR
/// Chains of one operator at a level become a single n-ary node.
TaskNode parse_recipe(std::string_view text);

/// Canonical, fully parenthesized form with single spaces around operators.
std::string serialize_recipe(const TaskNode& tree);

struct RecipeFile {
  std::string skill;
  TaskNode tree;
};

/// Line 1 `skill: <Name>`, remaining lines the recipe expression.
RecipeFile parse_recipe_file(std::string_view text, const std::string& source_name = "<recipe>");
RecipeFile load_recipe_file(const std::string& path);

/// Named skill trees plus an index from leaf object to the skills using it.
/// Mutated during setup only.
class SkillLibrary {
 public:
  void register_skill(const std::string& name, TaskNode tree);

  bool empty() const { return order_.empty(); }
  std::size_t size() const { return order_.size(); }
  /// Skill names in registration order.
  const std::vector<std::string>& names() const { return order_; }
  const TaskNode& skill(const std::string& name) const;
  bool contains(const std::string& name) const { return skills_.count(name) > 0; }

  const std::map<std::string, std::set<std::string>>& object_index() const { return index_; }

  /// Skills whose trees hold `object`, in registration order. An exact leaf
  /// name match wins; otherwise leaves of the same category match, so an item
  /// called "Bread" finds skills that use "Bread1".
  std::vector<std::string> skills_for_object(std::string_view object) const;

 private:
  void rebuild_index();

  std::map<std::string, TaskNode> skills_;
  std::vector<std::string> order_;
  std::map<std::string, std::set<std::string>> index_;
};

/// Registers every *.recipe file in `dir`, in filename order.
SkillLibrary load_skills(const std::string& dir);

}  // namespace cogtask::recipe
