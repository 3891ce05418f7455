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
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace cogtask::kb {

using NodeId = std::uint32_t;

enum class NodeKind { synset, lemma, concept_node, feature };

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view s);

struct KnowledgeNode {
  NodeId id = 0;
  std::string label;
  NodeKind kind = NodeKind::concept_node;
};

struct Relation {
  NodeId source = 0;
  std::string category;
  NodeId target = 0;
  double weight = 1.0;
};

/// Thrown by the loader. `line` is 1-based, 0 when the problem is not tied
/// to a single line (for example a kind declared for a label no triple uses).
class KbError : public std::runtime_error {
 public:
  KbError(std::string source, std::size_t line, const std::string& what);
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Semantic memory: labeled nodes joined by typed relations. Built once by
/// the loader (or by tests through add_*), then shared read-only.
class KnowledgeBase {
 public:
  /// Returns the existing id when the normalized label is already present;
  /// the kind of an existing node is never changed.
  NodeId add_node(std::string_view label, NodeKind kind = NodeKind::concept_node);

  /// Adds source -category-> target, creating endpoints as concepts.
  /// Throws std::invalid_argument on a duplicate triple or a weight outside (0, 1].
  void add_relation(std::string_view source, std::string_view category,
                    std::string_view target, double weight = 1.0);

  std::optional<NodeId> find(std::string_view label) const;
  const KnowledgeNode& node(NodeId id) const { return nodes_.at(id); }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return relations_.size(); }
  std::size_t category_count() const { return categories_.size(); }
  const std::set<std::string>& categories() const { return categories_; }

  std::span<const KnowledgeNode> nodes() const { return nodes_; }
  std::span<const Relation> relations() const { return relations_; }

  /// Relations touching `id` in either direction, as indices into relations().
  std::span<const std::uint32_t> incident(NodeId id) const { return incident_.at(id); }

  NodeId other_end(const Relation& r, NodeId from) const {
    return r.source == from ? r.target : r.source;
  }

 private:
  std::vector<KnowledgeNode> nodes_;
  std::unordered_map<std::string, NodeId> by_label_;
  std::vector<Relation> relations_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::set<std::string> categories_;
  std::set<std::tuple<NodeId, std::string, NodeId>> triples_;
};

/// Parses the TSV triple format:
///   source<TAB>category<TAB>target<TAB>weight
///   @kind<TAB>label<TAB>{synset|lemma|concept|feature}
///   # comment
/// Kind lines may appear anywhere; they are applied when nodes are created.
KnowledgeBase parse_kb(std::istream& in, const std::string& source_name = "<stream>");
KnowledgeBase load_kb(const std::string& path);

/// Writes kind declarations for non-concept nodes followed by every triple in
/// insertion order. parse_kb(write_kb(kb)) reproduces the same nodes and edges.
void write_kb(const KnowledgeBase& kb, std::ostream& out);

struct NeighborQuery {
  int radius = 1;
  /// Relation categories that are not traversed.
  std::set<std::string> excluded_categories;
};

/// Labels reachable from `label` within `radius` hops, edges traversed in
/// either direction. The query label itself is excluded; an unknown label
/// yields an empty set. Throws std::invalid_argument when radius < 1.
std::set<std::string> neighbors(const KnowledgeBase& kb, std::string_view label, int radius);
std::set<std::string> neighbors(const KnowledgeBase& kb, std::string_view label,
                                const NeighborQuery& query);

}  // namespace cogtask::kb
