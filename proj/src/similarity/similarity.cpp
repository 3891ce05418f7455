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

#include "cogtask/similarity.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "cogtask/labels.hpp"
#include "cogtask/simd/set_kernels.hpp"

namespace cogtask::similarity {

SemanticSignature signature(const kb::KnowledgeBase& kb, std::string_view term, int radius) {
  return signature(kb, term, SignatureOptions{radius, {}});
}

SemanticSignature signature(const kb::KnowledgeBase& kb, std::string_view term,
                            const SignatureOptions& options) {
  SemanticSignature sig;
  sig.term = normalize_label(term);
  sig.radius = options.radius;
  sig.members = kb::neighbors(kb, sig.term, kb::NeighborQuery{options.radius, options.excluded_categories});
  sig.members.insert(sig.term);
  return sig;
}

double jaccard(const SemanticSignature& a, const SemanticSignature& b) {
  std::size_t inter = 0;
  auto ia = a.members.begin();
  auto ib = b.members.begin();
  while (ia != a.members.end() && ib != b.members.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++inter;
      ++ia;
      ++ib;
    }
  }
  std::size_t uni = a.members.size() + b.members.size() - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

ScoreTable::ScoreTable(std::vector<std::string> rows, std::vector<std::string> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), cells_(rows_.size() * cols_.size(), 0.0) {
  auto check_unique = [](const std::vector<std::string>& v, const char* what) {
    std::vector<std::string> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument(std::string("duplicate ") + what + " label in score table");
  };
  check_unique(rows_, "row");
  check_unique(cols_, "column");
}

void ScoreTable::set(std::size_t r, std::size_t c, double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("score outside [0, 1]");
  cells_.at(r * cols_.size() + c) = v;
}

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7f", v);
  return buf;
}

void ScoreTable::write_tsv(std::ostream& out) const {
  for (const auto& c : cols_) out << '\t' << c;
  out << '\n';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out << rows_[r];
    for (std::size_t c = 0; c < cols_.size(); ++c) out << '\t' << format_score(at(r, c));
    out << '\n';
  }
}

ScoreTable ScoreTable::read_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("score table: missing header");
  auto header = split(line, '\t');
  if (header.empty() || !header[0].empty())
    throw std::invalid_argument("score table: header must start with an empty cell");
  std::vector<std::string> cols(header.begin() + 1, header.end());
  std::vector<std::string> rows;
  std::vector<std::vector<double>> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line, '\t');
    if (f.size() != cols.size() + 1)
      throw std::invalid_argument("score table: row '" + std::string(f[0]) + "' has wrong width");
    rows.emplace_back(f[0]);
    auto& vals = values.emplace_back();
    for (std::size_t i = 1; i < f.size(); ++i) {
      double v = 0.0;
      auto [p, ec] = std::from_chars(f[i].data(), f[i].data() + f[i].size(), v);
      if (ec != std::errc() || p != f[i].data() + f[i].size())
        throw std::invalid_argument("score table: bad cell '" + std::string(f[i]) + "'");
      vals.push_back(v);
    }
  }
  ScoreTable t(std::move(rows), std::move(cols));
  for (std::size_t r = 0; r < values.size(); ++r)
    for (std::size_t c = 0; c < values[r].size(); ++c) t.set(r, c, values[r][c]);
  return t;
}

ScoreTable score_matrix(const kb::KnowledgeBase& kb, std::span<const std::string> word_lemmas,
                        std::span<const std::string> items, const SignatureOptions& options) {
  if (items.empty()) throw std::invalid_argument("score_matrix needs at least one item");
  std::vector<std::string> rows;
  for (const auto& w : word_lemmas) rows.push_back(normalize_label(w));
  ScoreTable table(rows, std::vector<std::string>(items.begin(), items.end()));
  if (rows.empty()) return table;

  std::vector<SemanticSignature> word_sigs, item_sigs;
  for (const auto& w : rows) word_sigs.push_back(signature(kb, w, options));
  for (const auto& i : items) item_sigs.push_back(signature(kb, object_category(i), options));

  // Pack every signature over the union of labels they mention.
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const SemanticSignature& s) {
    for (const auto& m : s.members) index.emplace(m, index.size());
  };
  for (const auto& s : word_sigs) intern(s);
  for (const auto& s : item_sigs) intern(s);
  auto pack = [&](const SemanticSignature& s) {
    simd::PackedSet p(index.size());
    for (const auto& m : s.members) p.set(index.at(m));
    return p;
  };
  std::vector<simd::PackedSet> packed_words, packed_items;
  for (const auto& s : word_sigs) packed_words.push_back(pack(s));
  for (const auto& s : item_sigs) packed_items.push_back(pack(s));

  for (std::size_t r = 0; r < packed_words.size(); ++r) {
    for (std::size_t c = 0; c < packed_items.size(); ++c) {
      auto counts = simd::set_counts(packed_words[r].words(), packed_items[c].words());
      double v = counts.union_size == 0 ? 0.0
                                        : static_cast<double>(counts.intersection) /
                                              static_cast<double>(counts.union_size);
      table.set(r, c, v);
    }
  }
  return table;
}

std::vector<ItemScore> aggregate(const ScoreTable& table, Aggregation how) {
  std::vector<ItemScore> out;
  for (std::size_t c = 0; c < table.col_count(); ++c) {
    double v = 0.0;
    for (std::size_t r = 0; r < table.row_count(); ++r)
      v = how == Aggregation::max ? std::max(v, table.at(r, c)) : v + table.at(r, c);
    out.push_back({table.cols()[c], v});
  }
  return out;
}

const ItemScore* find_score(std::span<const ItemScore> row, std::string_view item) {
  for (const auto& s : row)
    if (s.item == item) return &s;
  std::string cat = object_category(item);
  for (const auto& s : row)
    if (object_category(s.item) == cat) return &s;
  return nullptr;
}

std::vector<ItemScore> normalized_shares(std::span<const ItemScore> row,
                                         std::span<const std::string> available) {
  std::vector<ItemScore> out;
  double total = 0.0;
  for (const auto& item : available) {
    const ItemScore* s = find_score(row, item);
    if (!s) throw std::invalid_argument("no score for item '" + item + "'");
    out.push_back({item, s->score});
    total += s->score;
  }
  if (!(total > 0.0)) throw NoAssociation();
  for (auto& s : out) s.score = 100.0 * s.score / total;
  return out;
}

}  // namespace cogtask::similarity
