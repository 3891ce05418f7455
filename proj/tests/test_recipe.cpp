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


#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace cogtask;
using namespace cogtask::recipe;

namespace {

TaskNode random_tree(std::mt19937& rng, int depth, int& counter) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth == 0 || coin(rng) == 0) return leaf("Obj" + std::to_string(counter++));
  std::uniform_int_distribution<int> arity(2, 4);
  std::vector<TaskNode> kids;
  for (int n = arity(rng); n > 0; --n) kids.push_back(random_tree(rng, depth - 1, counter));
  switch (coin(rng)) {
    case 0: return then_node(std::move(kids));
    case 1: return and_node(std::move(kids));
    default: return or_node(std::move(kids));
  }
}

}  // namespace

TEST_CASE("tea recipe shape") {
  auto t = parse_recipe(testing::kTeaRecipe);
  CHECK(t == then_node({leaf("Cup"), and_node({leaf("Tea"), leaf("Sugar")})}));
  CHECK(t.kind == NodeKind::then_node);
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].name == "Cup");
  CHECK(t.children[1].kind == NodeKind::and_node);
  CHECK(leaf_objects(t) == std::vector<std::string>{"Cup", "Tea", "Sugar"});
}

TEST_CASE("sandwich recipe shape") {
  auto t = parse_recipe(testing::kSandwichRecipe);
  CHECK(t == then_node({leaf("Bread1"), or_node({leaf("Meat"), leaf("Lettuce")}), leaf("Bread2")}));
  CHECK(node_count(t) == 6);
}

TEST_CASE("single leaf and whitespace") {
  CHECK(parse_recipe("(PicknPlace Cup)") == leaf("Cup"));
  CHECK(parse_recipe("  ( PicknPlace   Cup )\n") == leaf("Cup"));
  CHECK(parse_recipe("((PicknPlace Cup)THEN((PicknPlace Tea)AND(PicknPlace Sugar)))") ==
        parse_recipe(testing::kTeaRecipe));
}

TEST_CASE("serializer output") {
  CHECK(serialize_recipe(then_node({leaf("Cup"), and_node({leaf("Tea"), leaf("Sugar")})})) ==
        testing::kTeaRecipe);
  CHECK(serialize_recipe(leaf("Cup")) == "(PicknPlace Cup)");
  CHECK(serialize_recipe(parse_recipe(testing::kSandwichRecipe)) == testing::kSandwichRecipe);
}

TEST_CASE("parser errors") {
  SUBCASE("unbalanced") {
    try {
      parse_recipe("((PicknPlace Cup) THEN (PicknPlace Tea)");
      FAIL("expected RecipeError");
    } catch (const RecipeError& e) {
      CHECK(e.position() != std::string::npos);
    }
    CHECK_THROWS_AS(parse_recipe("(PicknPlace Cup))"), RecipeError);
    // Missing the final closing parenthesis.
    CHECK_THROWS_AS(parse_recipe("((PicknPlace Bread1)THEN((PicknPlace Meat)OR(PicknPlace Lettuce))THEN(PicknPlace Bread2)"),
                    RecipeError);
  }
  SUBCASE("unknown action") { CHECK_THROWS_AS(parse_recipe("(Throw Cup)"), RecipeError); }
  SUBCASE("mixed operators") {
    CHECK_THROWS_AS(parse_recipe("((PicknPlace A) THEN (PicknPlace B) AND (PicknPlace C))"), RecipeError);
  }
  SUBCASE("unknown operator") {
    CHECK_THROWS_AS(parse_recipe("((PicknPlace A) XOR (PicknPlace B))"), RecipeError);
  }
  SUBCASE("missing operator or operand") {
    CHECK_THROWS_AS(parse_recipe("((PicknPlace A) (PicknPlace B))"), RecipeError);
    CHECK_THROWS_AS(parse_recipe("((PicknPlace A) THEN)"), RecipeError);
    CHECK_THROWS_AS(parse_recipe("((PicknPlace A))"), RecipeError);
    CHECK_THROWS_AS(parse_recipe(""), RecipeError);
    CHECK_THROWS_AS(parse_recipe("(PicknPlace A) THEN (PicknPlace B)"), RecipeError);
  }
  SUBCASE("bad identifier") { CHECK_THROWS_AS(parse_recipe("(PicknPlace 9lives)"), RecipeError); }
}

TEST_CASE("random trees round-trip") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    int counter = 0;
    TaskNode t = random_tree(rng, 4, counter);
    assign_ids(t);
    std::string text = serialize_recipe(t);
    TaskNode back = parse_recipe(text);
    INFO(text);
    CHECK(back == t);
    CHECK(serialize_recipe(back) == text);
    CHECK(parse_recipe(serialize_recipe(back)) == back);
  }
}

TEST_CASE("validate enforces arity") {
  TaskNode bad = then_node({leaf("A")});
  CHECK_THROWS_AS(validate(bad), RecipeError);
  TaskNode with_kids = leaf("A");
  with_kids.children.push_back(leaf("B"));
  CHECK_THROWS_AS(validate(with_kids), RecipeError);
  CHECK_NOTHROW(validate(parse_recipe(testing::kTeaRecipe)));
}

TEST_CASE("preorder ids") {
  auto t = parse_recipe(testing::kTeaRecipe);
  CHECK(t.id == 0);
  CHECK(t.children[0].id == 1);
  CHECK(t.children[1].id == 2);
  CHECK(t.children[1].children[1].id == 4);
}

TEST_CASE("skill library indexing") {
  SkillLibrary lib;
  lib.register_skill("TeaMaking", parse_recipe(testing::kTeaRecipe));
  for (const char* o : {"Cup", "Tea", "Sugar"})
    CHECK(lib.object_index().at(o) == std::set<std::string>{"TeaMaking"});
  CHECK(lib.object_index().size() == 3);
  CHECK_THROWS(lib.register_skill("TeaMaking", leaf("Cup")));
  CHECK_THROWS(lib.register_skill("Empty", TaskNode{NodeKind::then_node, "", Action::pick_n_place, {}, 0}));

  SkillLibrary shared;
  shared.register_skill("Toast", then_node({leaf("Bread"), leaf("Butter")}));
  shared.register_skill("Sandwich", then_node({leaf("Bread"), leaf("Ham")}));
  CHECK(shared.object_index().at("Bread") == std::set<std::string>{"Toast", "Sandwich"});
  CHECK(shared.skills_for_object("Bread") == std::vector<std::string>{"Toast", "Sandwich"});
}

TEST_CASE("every leaf of the shipped recipes finds its skill") {
  const auto& lib = testing::shipped_skills();
  CHECK(lib.names() == std::vector<std::string>{"SandwichMaking", "TeaMaking"});
  std::size_t leaves = 0;
  for (const auto& name : lib.names()) {
    for (const auto& obj : leaf_objects(lib.skill(name))) {
      ++leaves;
      auto skills = lib.skills_for_object(obj);
      CHECK(std::find(skills.begin(), skills.end(), name) != skills.end());
      CHECK(lib.object_index().at(obj).count(name) == 1);
    }
  }
  std::size_t indexed = 0;
  for (const auto& [obj, skills] : lib.object_index()) indexed += skills.size();
  CHECK(indexed == leaves);
  CHECK(lib.skills_for_object("Bread") == std::vector<std::string>{"SandwichMaking"});
  CHECK(lib.skills_for_object("Teapot").empty());
}

TEST_CASE("recipe files") {
  auto f = parse_recipe_file("skill: TeaMaking\n" + std::string(testing::kTeaRecipe) + "\n");
  CHECK(f.skill == "TeaMaking");
  CHECK(f.tree == parse_recipe(testing::kTeaRecipe));
  CHECK_THROWS(parse_recipe_file(testing::kTeaRecipe));
  CHECK_THROWS(load_recipe_file("/nonexistent.recipe"));
}
