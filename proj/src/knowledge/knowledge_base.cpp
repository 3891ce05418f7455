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

#include "cogtask/knowledge_base.hpp"

#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "cogtask/labels.hpp"

namespace cogtask::kb {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::synset: return "synset";
    case NodeKind::lemma: return "lemma";
    case NodeKind::concept_node: return "concept";
    case NodeKind::feature: return "feature";
  }
  return "concept";
}

std::optional<NodeKind> parse_node_kind(std::string_view s) {
  if (s == "synset") return NodeKind::synset;
  if (s == "lemma") return NodeKind::lemma;
  if (s == "concept") return NodeKind::concept_node;
  if (s == "feature") return NodeKind::feature;
  return std::nullopt;
}

KbError::KbError(std::string source, std::size_t line, const std::string& what)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

NodeId KnowledgeBase::add_node(std::string_view label, NodeKind kind) {
  std::string norm = normalize_label(label);
  if (norm.empty()) throw std::invalid_argument("empty knowledge label");
  if (auto it = by_label_.find(norm); it != by_label_.end()) return it->second;
  auto id = static_cast<NodeId>(nodes_.size());
  by_label_.emplace(norm, id);
  nodes_.push_back({id, std::move(norm), kind});
  incident_.emplace_back();
  return id;
}

void KnowledgeBase::add_relation(std::string_view source, std::string_view category,
                                 std::string_view target, double weight) {
  std::string cat{trim(category)};
  if (cat.empty()) throw std::invalid_argument("empty relation category");
  if (!(weight > 0.0 && weight <= 1.0))
    throw std::invalid_argument("relation weight must be in (0, 1]");
  NodeId s = add_node(source);
  NodeId t = add_node(target);
  if (!triples_.emplace(s, cat, t).second)
    throw std::invalid_argument("duplicate triple " + nodes_[s].label + " " + cat + " " +
                                nodes_[t].label);
  auto index = static_cast<std::uint32_t>(relations_.size());
  relations_.push_back({s, cat, t, weight});
  incident_[s].push_back(index);
  if (t != s) incident_[t].push_back(index);
  categories_.insert(std::move(cat));
}

std::optional<NodeId> KnowledgeBase::find(std::string_view label) const {
  auto it = by_label_.find(normalize_label(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct PendingTriple {
  std::string source, category, target;
  double weight;
  std::size_t line;
};

double parse_weight(std::string_view field, const std::string& src, std::size_t line) {
  field = trim(field);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw KbError(src, line, "malformed weight '" + std::string(field) + "'");
  if (!(value > 0.0 && value <= 1.0))
    throw KbError(src, line, "weight out of range (0, 1]: " + std::string(field));
  return value;
}

}  // namespace

KnowledgeBase parse_kb(std::istream& in, const std::string& source_name) {
  std::map<std::string, std::pair<NodeKind, std::size_t>> kinds;
  std::vector<PendingTriple> triples;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = raw;
    if (trim(line).empty() || trim(line).front() == '#') continue;

    auto fields = split(line, '\t');
    if (fields[0] == "@kind") {
      if (fields.size() != 3)
        throw KbError(source_name, line_no, "kind line needs 3 tab-separated fields");
      std::string label = normalize_label(fields[1]);
      auto kind = parse_node_kind(trim(fields[2]));
      if (label.empty()) throw KbError(source_name, line_no, "empty label in kind line");
      if (!kind)
        throw KbError(source_name, line_no, "unknown node kind '" + std::string(fields[2]) + "'");
      auto [it, fresh] = kinds.emplace(label, std::make_pair(*kind, line_no));
      if (!fresh && it->second.first != *kind)
        throw KbError(source_name, line_no, "conflicting kind for '" + label + "'");
      continue;
    }
    if (fields.size() != 4)
      throw KbError(source_name, line_no,
                    "expected source<TAB>category<TAB>target<TAB>weight, got " +
                        std::to_string(fields.size()) + " fields");
    PendingTriple t{normalize_label(fields[0]), std::string(trim(fields[1])),
                    normalize_label(fields[2]), parse_weight(fields[3], source_name, line_no),
                    line_no};
    if (t.source.empty() || t.target.empty() || t.category.empty())
      throw KbError(source_name, line_no, "empty field");
    triples.push_back(std::move(t));
  }

  KnowledgeBase kb;
  auto kind_of = [&](const std::string& label) {
    auto it = kinds.find(label);
    return it == kinds.end() ? NodeKind::concept_node : it->second.first;
  };
  for (const auto& t : triples) {
    kb.add_node(t.source, kind_of(t.source));
    kb.add_node(t.target, kind_of(t.target));
    try {
      kb.add_relation(t.source, t.category, t.target, t.weight);
    } catch (const std::invalid_argument& e) {
      throw KbError(source_name, t.line, e.what());
    }
  }
  for (const auto& [label, decl] : kinds) {
    if (!kb.find(label))
      throw KbError(source_name, decl.second,
                    "kind declared for '" + label + "' which no triple mentions");
  }
  return kb;
}

KnowledgeBase load_kb(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KbError(path, 0, "cannot open file");
  return parse_kb(in, path);
}

void write_kb(const KnowledgeBase& kb, std::ostream& out) {
  for (const auto& n : kb.nodes()) {
    if (n.kind != NodeKind::concept_node) out << "@kind\t" << n.label << '\t' << to_string(n.kind) << '\n';
  }
  char buf[64];
  for (const auto& r : kb.relations()) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, r.weight);
    (void)ec;
    out << kb.node(r.source).label << '\t' << r.category << '\t' << kb.node(r.target).label << '\t'
        << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
  }
}

std::set<std::string> neighbors(const KnowledgeBase& kb, std::string_view label, int radius) {
  return neighbors(kb, label, NeighborQuery{radius, {}});
}

std::set<std::string> neighbors(const KnowledgeBase& kb, std::string_view label,
                                const NeighborQuery& query) {
  if (query.radius < 1) throw std::invalid_argument("neighbor radius must be >= 1");
  std::set<std::string> out;
  auto start = kb.find(label);
  if (!start) return out;

  // Breadth-first over the undirected view of the graph.
  std::vector<int> depth(kb.node_count(), -1);
  std::deque<NodeId> frontier{*start};
  depth[*start] = 0;
  while (!frontier.empty()) {
    NodeId cur = frontier.front();
    frontier.pop_front();
    if (depth[cur] == query.radius) continue;
    for (std::uint32_t ri : kb.incident(cur)) {
      const Relation& r = kb.relations()[ri];
      if (query.excluded_categories.count(r.category)) continue;
      NodeId next = kb.other_end(r, cur);
      if (depth[next] >= 0) continue;
      depth[next] = depth[cur] + 1;
      out.insert(kb.node(next).label);
      frontier.push_back(next);
    }
  }
  return out;
}

}  // namespace cogtask::kb
