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

#include <iosfwd>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cogtask/knowledge_base.hpp"

namespace cogtask::similarity {

/// No available item has a positive score, so nothing can be chosen.
class NoAssociation : public std::runtime_error {
 public:
  NoAssociation() : std::runtime_error("no semantic association") {}
};

/// A term plus its knowledge-graph neighborhood. Always contains the term.
struct SemanticSignature {
  std::string term;
  std::set<std::string> members;
  int radius = 1;
};

struct SignatureOptions {
  int radius = 1;
  std::set<std::string> excluded_categories;
};

SemanticSignature signature(const kb::KnowledgeBase& kb, std::string_view term, int radius = 1);
SemanticSignature signature(const kb::KnowledgeBase& kb, std::string_view term,
                            const SignatureOptions& options);

/// |A n B| / |A u B| over signature members.
double jaccard(const SemanticSignature& a, const SemanticSignature& b);

/// Words down, items across; row-major cells in [0, 1].
class ScoreTable {
 public:
  ScoreTable() = default;
  ScoreTable(std::vector<std::string> rows, std::vector<std::string> cols);

  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  double at(std::size_t r, std::size_t c) const { return cells_.at(r * cols_.size() + c); }
  void set(std::size_t r, std::size_t c, double v);
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(cells_).subspan(r * cols_.size(), cols_.size());
  }

  /// TSV with a leading empty header cell, scores printed with 7 decimals.
  void write_tsv(std::ostream& out) const;
  static ScoreTable read_tsv(std::istream& in);

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<double> cells_;
};

/// Table rows come from the word lemmas. Item columns keep their names while
/// their signatures are built from object_category(item).
ScoreTable score_matrix(const kb::KnowledgeBase& kb, std::span<const std::string> word_lemmas,
                        std::span<const std::string> items, const SignatureOptions& options = {});

struct ItemScore {
  std::string item;
  double score = 0.0;
};

enum class Aggregation { max, sum };

/// Collapses the table to one score per item column.
std::vector<ItemScore> aggregate(const ScoreTable& table, Aggregation how = Aggregation::max);

/// Looks up an item's score by exact name, falling back to its category so
/// that "Bread1" can read a "Bread" column. Returns nullptr when absent.
const ItemScore* find_score(std::span<const ItemScore> row, std::string_view item);

/// Percentage share of each available item: score / sum * 100. Throws
/// NoAssociation when every available score is zero and
/// std::invalid_argument when an item has no score.
std::vector<ItemScore> normalized_shares(std::span<const ItemScore> row,
                                         std::span<const std::string> available);

/// Fixed 7-decimal rendering used in tables and traces.
std::string format_score(double v);

}  // namespace cogtask::similarity
