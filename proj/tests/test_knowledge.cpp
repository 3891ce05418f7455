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
#include <sstream>

#include "doctest.h"
#include "support.hpp"

using namespace cogtask;
using kb::KbError;
using kb::KnowledgeBase;

namespace {

KnowledgeBase parse(const std::string& text) {
  std::istringstream in(text);
  return kb::parse_kb(in, "test");
}

}  // namespace

TEST_CASE("two triples sharing a source") {
  auto kb = parse("apple\tIS_A\tfruit\t1.0\napple\tisUsedFor\teating\t1.0\n");
  CHECK(kb.node_count() == 3);
  CHECK(kb.edge_count() == 2);
  CHECK(kb.category_count() == 2);
  REQUIRE(kb.find("apple"));
  CHECK(kb.node(*kb.find("apple")).kind == kb::NodeKind::concept_node);
}

TEST_CASE("empty input gives an empty knowledge base") {
  auto kb = parse("");
  CHECK(kb.node_count() == 0);
  CHECK(kb.edge_count() == 0);
  auto only_comments = parse("# nothing\n\n   \n");
  CHECK(only_comments.node_count() == 0);
}

TEST_CASE("labels are normalized on load") {
  auto kb = parse("  Green Tea \tIS_A\tDrink\t0.5\n");
  CHECK(kb.find("green_tea"));
  CHECK(kb.find("Green   Tea"));
  CHECK(kb.find("drink"));
  CHECK(kb.relations()[0].weight == doctest::Approx(0.5));
}

TEST_CASE("kind declarations apply when the node is created") {
  auto kb = parse("tea\tIS_A\ttea.n.01\t1\n@kind\ttea.n.01\tsynset\n@kind\thot\tfeature\ntea\tHasProperty\thot\t1\n");
  CHECK(kb.node(*kb.find("tea.n.01")).kind == kb::NodeKind::synset);
  CHECK(kb.node(*kb.find("hot")).kind == kb::NodeKind::feature);
  CHECK(kb.node(*kb.find("tea")).kind == kb::NodeKind::concept_node);
}

TEST_CASE("loader errors carry line numbers") {
  SUBCASE("malformed line") {
    try {
      parse("a\tR\tb\t1\nbroken line\n");
      FAIL("expected KbError");
    } catch (const KbError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("bad weight") {
    try {
      parse("a\tR\tb\tabc\n");
      FAIL("expected KbError");
    } catch (const KbError& e) {
      CHECK(e.line() == 1);
    }
    CHECK_THROWS_AS(parse("a\tR\tb\t1.5\n"), KbError);
    CHECK_THROWS_AS(parse("a\tR\tb\t0\n"), KbError);
  }
  SUBCASE("duplicate triple") {
    try {
      parse("a\tR\tb\t1\nc\tR\td\t1\nA\tR\tB\t0.3\n");
      FAIL("expected KbError");
    } catch (const KbError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("dangling kind declaration") {
    CHECK_THROWS_AS(parse("@kind\tghost\tfeature\na\tR\tb\t1\n"), KbError);
  }
  SUBCASE("conflicting kind declarations") {
    CHECK_THROWS_AS(parse("@kind\ta\tfeature\n@kind\ta\tsynset\na\tR\tb\t1\n"), KbError);
  }
  SUBCASE("unknown kind") { CHECK_THROWS_AS(parse("@kind\ta\tplanet\na\tR\tb\t1\n"), KbError); }
}

TEST_CASE("missing file") { CHECK_THROWS(kb::load_kb("/nonexistent/kb.tsv")); }

TEST_CASE("fixture counts match an independent line count") {
  const auto& kb = testing::fixture_kb();
  auto raw = testing::read_raw_triples(testing::kb_path());
  CHECK(kb.edge_count() == raw.edges.size());
  CHECK(kb.node_count() == raw.labels.size());
  CHECK(kb.edge_count() >= 150);
}

TEST_CASE("neighbors: hops and unknown labels") {
  auto kb = parse("apple\tIS_A\tfruit\t1\nfruit\tIS_A\tfood\t1\n");
  CHECK(kb::neighbors(kb, "apple", 1) == std::set<std::string>{"fruit"});
  CHECK(kb::neighbors(kb, "apple", 2) == std::set<std::string>{"fruit", "food"});
  CHECK(kb::neighbors(kb, "zzz_unknown", 1).empty());
  // Edges are walked in both directions.
  CHECK(kb::neighbors(kb, "food", 1) == std::set<std::string>{"fruit"});
  CHECK_THROWS_AS(kb::neighbors(kb, "apple", 0), std::invalid_argument);
}

TEST_CASE("neighbors: excluded categories are not traversed") {
  auto kb = parse("tea\tIS_A\tdrink\t1\ntea\tRelatedTo\thot\t1\n");
  kb::NeighborQuery q{1, {"RelatedTo"}};
  CHECK(kb::neighbors(kb, "tea", q) == std::set<std::string>{"drink"});
}

TEST_CASE("neighbors grow with radius and are deterministic") {
  const auto& kb = testing::fixture_kb();
  for (const auto& node : kb.nodes()) {
    auto r1 = kb::neighbors(kb, node.label, 1);
    auto r2 = kb::neighbors(kb, node.label, 2);
    CHECK(std::includes(r2.begin(), r2.end(), r1.begin(), r1.end()));
    CHECK(kb::neighbors(kb, node.label, 1) == r1);
  }
}

TEST_CASE("write then parse reproduces nodes and edges") {
  const auto& kb = testing::fixture_kb();
  std::ostringstream out;
  kb::write_kb(kb, out);
  auto again = parse(out.str());
  REQUIRE(again.node_count() == kb.node_count());
  REQUIRE(again.edge_count() == kb.edge_count());
  for (std::size_t i = 0; i < kb.edge_count(); ++i) {
    const auto& a = kb.relations()[i];
    const auto& b = again.relations()[i];
    CHECK(kb.node(a.source).label == again.node(b.source).label);
    CHECK(kb.node(a.target).label == again.node(b.target).label);
    CHECK(a.category == b.category);
    CHECK(a.weight == b.weight);
  }
  for (const auto& n : kb.nodes()) CHECK(again.node(*again.find(n.label)).kind == n.kind);
}

TEST_CASE("add_relation rejects duplicates and bad weights") {
  KnowledgeBase kb;
  kb.add_relation("a", "R", "b");
  CHECK_THROWS_AS(kb.add_relation("a", "R", "b"), std::invalid_argument);
  CHECK_NOTHROW(kb.add_relation("a", "S", "b"));
  CHECK_THROWS_AS(kb.add_relation("a", "R", "c", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kb.add_relation("a", "R", "c", 1.01), std::invalid_argument);
  CHECK(kb.add_node("A") == *kb.find("a"));
}
