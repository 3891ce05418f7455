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


#include <sstream>

#include "cogtask/labels.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cogtask;
using namespace cogtask::lingual;

namespace {

std::vector<std::string> lemmas(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& w : analyze(text, testing::lingual_resources())) out.push_back(w.lemma);
  return out;
}

std::vector<std::string> tokens_of(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& w : analyze(text, testing::lingual_resources())) out.push_back(w.token);
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("tokenize") {
  CHECK(tokenize("It is cold outside.") == Strings{"It", "is", "cold", "outside"});
  CHECK(tokenize("I am hungry") == Strings{"I", "am", "hungry"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("  ,  !! ").empty());
  CHECK(tokenize("\"Tea,\" please!") == Strings{"Tea", "please"});
}

TEST_CASE("utterances must not be empty") {
  CHECK_THROWS_AS(make_utterance(""), std::invalid_argument);
  CHECK_THROWS_AS(make_utterance("   "), std::invalid_argument);
  CHECK(make_utterance("hi", 7).timestamp == 7);
}

TEST_CASE("pos_tag uses the lexicon then suffix rules") {
  const auto& lex = testing::lingual_resources().lexicon;
  Strings toks{"It", "is", "cold", "outside"};
  auto tagged = pos_tag(toks, lex);
  CHECK(tagged == std::vector<TaggedToken>{{"It", "PRP"}, {"is", "VBZ"}, {"cold", "JJ"}, {"outside", "RB"}});
  Strings h{"hungry"};
  CHECK(pos_tag(h, lex) == std::vector<TaggedToken>{{"hungry", "JJ"}});
  Strings u{"blorptastic"};
  CHECK(pos_tag(u, lex) == std::vector<TaggedToken>{{"blorptastic", "NN"}});
  Strings s{"zooming", "quickly", "greenish"};
  auto suf = pos_tag(s, lex);
  CHECK(suf[0].tag == "VBG");
  CHECK(suf[1].tag == "RB");
  CHECK(suf[2].tag == "JJ");
}

TEST_CASE("word classes come from tag prefixes") {
  CHECK(class_of_tag("NN") == WordClass::noun);
  CHECK(class_of_tag("NNS") == WordClass::noun);
  CHECK(class_of_tag("VBZ") == WordClass::verb);
  CHECK(class_of_tag("JJR") == WordClass::adjective);
  CHECK_FALSE(class_of_tag("RB"));
  CHECK_FALSE(class_of_tag("PRP"));
  CHECK_FALSE(class_of_tag("DT"));
}

TEST_CASE("tagged words for the example utterances") {
  CHECK(lemmas("It is cold outside") == Strings{"cold"});
  CHECK(tokens_of("I am thirsty") == Strings{"thirsty"});
  CHECK(lemmas("I am thirsty") == Strings{"thirst"});
  CHECK(lemmas("I want to make a sandwich") == Strings{"make", "sandwich"});
  CHECK(lemmas("I am hungry") == Strings{"hungry"});
  CHECK(lemmas("I need some food") == Strings{"food"});
  CHECK(lemmas("I need something to drink") == Strings{"drink"});
  CHECK(lemmas("It is").empty());
}

TEST_CASE("duplicate lemmas are reported once") { CHECK(lemmas("tea tea Tea") == Strings{"tea"}); }

TEST_CASE("pipeline properties over a set of utterances") {
  const Strings corpus{"It is cold outside", "I am thirsty", "I want to make a sandwich", "I am hungry",
                       "I need some food", "I need something to drink", "the sky is blue",
                       "Could you please pour me some hot tea quickly", "burgers and coffee!!"};
  for (const auto& text : corpus) {
    auto words = analyze(text, testing::lingual_resources());
    auto again = analyze(text, testing::lingual_resources());
    REQUIRE(words.size() == again.size());
    auto toks = tokenize(text);
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(words[i].lemma == again[i].lemma);
      CHECK(std::find(toks.begin(), toks.end(), words[i].token) != toks.end());
      CHECK(class_of_tag(words[i].tag) == words[i].klass);
      CHECK(words[i].lemma == normalize_label(words[i].lemma));
    }
  }
}

TEST_CASE("resource parsers") {
  std::istringstream lex("# comment\ntea\tNN\nPour\tVB\n");
  auto l = parse_lexicon(lex);
  CHECK(l.lookup("TEA") == std::optional<std::string>{"NN"});
  CHECK(l.lookup("pour") == std::optional<std::string>{"VB"});
  CHECK_FALSE(l.lookup("cup"));
  std::istringstream bad("tea\n");
  CHECK_THROWS(parse_lexicon(bad));
  std::istringstream al("thirsty\tthirst\n");
  auto a = parse_lemma_aliases(al);
  CHECK(a.lemma_of("Thirsty") == "thirst");
  CHECK(a.lemma_of("tea") == "tea");
  std::istringstream sw("i\n# x\nwant\n");
  auto s = parse_stopwords(sw);
  CHECK(s.contains("want"));
  CHECK(s.contains("i"));
  CHECK(s.size() == 2);
}
