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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cogtask::lingual {

enum class WordClass { noun, verb, adjective };

std::string_view to_string(WordClass klass);

/// NN* -> noun, VB* -> verb, JJ* -> adjective, anything else -> nullopt.
std::optional<WordClass> class_of_tag(std::string_view penn_tag);

struct Utterance {
  std::string text;
  std::uint64_t timestamp = 0;
};

/// Throws std::invalid_argument when the text is empty after trimming.
Utterance make_utterance(std::string text, std::uint64_t timestamp = 0);

struct TaggedToken {
  std::string token;
  std::string tag;
  bool operator==(const TaggedToken&) const = default;
};

struct TaggedWord {
  std::string token;
  std::string tag;
  WordClass klass = WordClass::noun;
  std::string lemma;
};

/// Penn Treebank tag lookup keyed by lowercased token.
class Lexicon {
 public:
  void add(std::string_view token, std::string_view tag);
  std::optional<std::string> lookup(std::string_view token) const;
  std::size_t size() const { return tags_.size(); }

 private:
  std::unordered_map<std::string, std::string> tags_;
};

/// Surface form -> lemma overrides ("thirsty" -> "thirst").
class LemmaAliases {
 public:
  void add(std::string_view surface, std::string_view lemma);
  /// Normalized label of `token`, replaced by its alias when one exists.
  std::string lemma_of(std::string_view token) const;
  std::size_t size() const { return aliases_.size(); }

 private:
  std::unordered_map<std::string, std::string> aliases_;
};

using StopWords = std::unordered_set<std::string>;

Lexicon parse_lexicon(std::istream& in, const std::string& source_name = "<stream>");
StopWords parse_stopwords(std::istream& in);
LemmaAliases parse_lemma_aliases(std::istream& in, const std::string& source_name = "<stream>");

/// Everything the tagged-word pipeline reads from disk.
struct LingualResources {
  Lexicon lexicon;
  StopWords stopwords;
  LemmaAliases aliases;

  /// Expects lexicon.tsv, stopwords.txt and lemma_alias.tsv in `dir`.
  static LingualResources load(const std::string& dir);
};

/// Whitespace split with leading/trailing punctuation stripped from each
/// token. Case is preserved; tokens that are pure punctuation disappear.
std::vector<std::string> tokenize(std::string_view text);
inline std::vector<std::string> tokenize(const Utterance& u) { return tokenize(u.text); }

/// One tag per token: lexicon first, then suffix rules (-ing VBG, -ly RB,
/// -y/-ish JJ), then NN.
std::vector<TaggedToken> pos_tag(std::span<const std::string> tokens, const Lexicon& lexicon);

/// Keeps nouns, verbs and adjectives that are not stopwords, in utterance
/// order, deduplicated by lemma.
std::vector<TaggedWord> extract_tagged_words(std::span<const TaggedToken> tagged,
                                             const StopWords& stopwords,
                                             const LemmaAliases& aliases = {});

/// tokenize -> pos_tag -> extract_tagged_words.
std::vector<TaggedWord> analyze(std::string_view text, const LingualResources& res);

}  // namespace cogtask::lingual
