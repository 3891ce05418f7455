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

#include "cogtask/lingual.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "cogtask/labels.hpp"

namespace cogtask::lingual {

std::string_view to_string(WordClass klass) {
  switch (klass) {
    case WordClass::noun: return "noun";
    case WordClass::verb: return "verb";
    case WordClass::adjective: return "adjective";
  }
  return "noun";
}

std::optional<WordClass> class_of_tag(std::string_view tag) {
  if (tag.starts_with("NN")) return WordClass::noun;
  if (tag.starts_with("VB")) return WordClass::verb;
  if (tag.starts_with("JJ")) return WordClass::adjective;
  return std::nullopt;
}

Utterance make_utterance(std::string text, std::uint64_t timestamp) {
  if (trim(text).empty()) throw std::invalid_argument("empty utterance");
  return {std::move(text), timestamp};
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

void Lexicon::add(std::string_view token, std::string_view tag) {
  tags_[lower(trim(token))] = std::string(trim(tag));
}

std::optional<std::string> Lexicon::lookup(std::string_view token) const {
  auto it = tags_.find(lower(token));
  if (it == tags_.end()) return std::nullopt;
  return it->second;
}

void LemmaAliases::add(std::string_view surface, std::string_view lemma) {
  aliases_[normalize_label(surface)] = normalize_label(lemma);
}

std::string LemmaAliases::lemma_of(std::string_view token) const {
  std::string norm = normalize_label(token);
  auto it = aliases_.find(norm);
  return it == aliases_.end() ? norm : it->second;
}

Lexicon parse_lexicon(std::istream& in, const std::string& source_name) {
  Lexicon lex;
  for_each_line(in, [&](std::string_view line, std::size_t n) {
    auto f = split(line, '\t');
    if (f.size() != 2 || trim(f[0]).empty() || trim(f[1]).empty())
      throw std::runtime_error(source_name + ":" + std::to_string(n) + ": expected token<TAB>tag");
    lex.add(f[0], f[1]);
  });
  return lex;
}

StopWords parse_stopwords(std::istream& in) {
  StopWords words;
  for_each_line(in, [&](std::string_view line, std::size_t) { words.insert(lower(line)); });
  return words;
}

LemmaAliases parse_lemma_aliases(std::istream& in, const std::string& source_name) {
  LemmaAliases aliases;
  for_each_line(in, [&](std::string_view line, std::size_t n) {
    auto f = split(line, '\t');
    if (f.size() != 2 || trim(f[0]).empty() || trim(f[1]).empty())
      throw std::runtime_error(source_name + ":" + std::to_string(n) +
                               ": expected surface<TAB>lemma");
    aliases.add(f[0], f[1]);
  });
  return aliases;
}

LingualResources LingualResources::load(const std::string& dir) {
  LingualResources res;
  {
    auto path = dir + "/lexicon.tsv";
    auto in = open_or_throw(path);
    res.lexicon = parse_lexicon(in, path);
  }
  {
    auto in = open_or_throw(dir + "/stopwords.txt");
    res.stopwords = parse_stopwords(in);
  }
  {
    auto path = dir + "/lemma_alias.tsv";
    auto in = open_or_throw(path);
    res.aliases = parse_lemma_aliases(in, path);
  }
  return res;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view word = text.substr(start, i - start);
    while (!word.empty() && is_punct(word.front())) word.remove_prefix(1);
    while (!word.empty() && is_punct(word.back())) word.remove_suffix(1);
    if (!word.empty()) tokens.emplace_back(word);
  }
  return tokens;
}

namespace {

std::string suffix_tag(std::string_view token) {
  std::string w = lower(token);
  auto ends = [&](std::string_view suf) { return w.size() > suf.size() && w.ends_with(suf); };
  if (ends("ing")) return "VBG";
  if (ends("ly")) return "RB";
  if (ends("ish") || ends("y")) return "JJ";
  return "NN";
}

}  // namespace

std::vector<TaggedToken> pos_tag(std::span<const std::string> tokens, const Lexicon& lexicon) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    auto tag = lexicon.lookup(tok);
    out.push_back({tok, tag ? *tag : suffix_tag(tok)});
  }
  return out;
}

std::vector<TaggedWord> extract_tagged_words(std::span<const TaggedToken> tagged,
                                             const StopWords& stopwords,
                                             const LemmaAliases& aliases) {
  std::vector<TaggedWord> out;
  std::unordered_set<std::string> seen;
  for (const auto& t : tagged) {
    auto klass = class_of_tag(t.tag);
    if (!klass) continue;
    if (stopwords.count(lower(t.token))) continue;
    std::string lemma = aliases.lemma_of(t.token);
    if (lemma.empty() || !seen.insert(lemma).second) continue;
    out.push_back({t.token, t.tag, *klass, std::move(lemma)});
  }
  return out;
}

std::vector<TaggedWord> analyze(std::string_view text, const LingualResources& res) {
  auto tokens = tokenize(text);
  auto tagged = pos_tag(tokens, res.lexicon);
  return extract_tagged_words(tagged, res.stopwords, res.aliases);
}

}  // namespace cogtask::lingual
