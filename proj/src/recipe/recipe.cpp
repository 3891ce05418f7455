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

#include "cogtask/recipe.hpp"

#include <cctype>

#include "cogtask/labels.hpp"

namespace cogtask::recipe {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::skill_root: return "SkillRoot";
    case NodeKind::skill: return "Skill";
    case NodeKind::then_node: return "THEN";
    case NodeKind::and_node: return "AND";
    case NodeKind::or_node: return "OR";
    case NodeKind::object_leaf: return "ObjectLeaf";
  }
  return "?";
}

std::string_view to_string(Action action) {
  switch (action) {
    case Action::pick_n_place: return "PicknPlace";
  }
  return "?";
}

std::optional<Action> parse_action(std::string_view verb) {
  if (verb == "PicknPlace") return Action::pick_n_place;
  return std::nullopt;
}

TaskNode leaf(std::string object, Action action) {
  TaskNode n;
  n.kind = NodeKind::object_leaf;
  n.name = std::move(object);
  n.action = action;
  return n;
}

namespace {

TaskNode composite(NodeKind kind, std::vector<TaskNode> children) {
  TaskNode n;
  n.kind = kind;
  n.children = std::move(children);
  assign_ids(n);
  return n;
}

bool is_ident(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

TaskNode then_node(std::vector<TaskNode> children) {
  return composite(NodeKind::then_node, std::move(children));
}
TaskNode and_node(std::vector<TaskNode> children) {
  return composite(NodeKind::and_node, std::move(children));
}
TaskNode or_node(std::vector<TaskNode> children) {
  return composite(NodeKind::or_node, std::move(children));
}

TaskNode skill_node(std::string name, TaskNode body) {
  TaskNode n;
  n.kind = NodeKind::skill;
  n.name = std::move(name);
  n.children.push_back(std::move(body));
  assign_ids(n);
  return n;
}

TaskNode skill_root(std::vector<TaskNode> skills) {
  return composite(NodeKind::skill_root, std::move(skills));
}

int assign_ids(TaskNode& node, int first) {
  node.id = first++;
  for (auto& c : node.children) first = assign_ids(c, first);
  return first;
}

std::size_t node_count(const TaskNode& node) {
  std::size_t n = 1;
  for (const auto& c : node.children) n += node_count(c);
  return n;
}

std::vector<std::string> leaf_objects(const TaskNode& node) {
  std::vector<std::string> out;
  auto walk = [&](const TaskNode& n, auto& self) -> void {
    if (n.kind == NodeKind::object_leaf) out.push_back(n.name);
    for (const auto& c : n.children) self(c, self);
  };
  walk(node, walk);
  return out;
}

void validate(const TaskNode& node) {
  switch (node.kind) {
    case NodeKind::object_leaf:
      if (!node.children.empty()) throw RecipeError("object leaf cannot have children");
      if (!is_ident(node.name)) throw RecipeError("invalid object name '" + node.name + "'");
      break;
    case NodeKind::then_node:
    case NodeKind::and_node:
    case NodeKind::or_node:
      if (node.children.size() < 2)
        throw RecipeError(std::string(to_string(node.kind)) + " needs at least two children");
      for (const auto& c : node.children) {
        if (c.kind == NodeKind::skill || c.kind == NodeKind::skill_root)
          throw RecipeError("skill nodes cannot appear inside a recipe body");
        validate(c);
      }
      break;
    case NodeKind::skill:
      if (node.children.empty()) throw RecipeError("skill '" + node.name + "' has no body");
      if (node.name.empty()) throw RecipeError("skill without a name");
      for (const auto& c : node.children) {
        if (c.kind == NodeKind::skill || c.kind == NodeKind::skill_root)
          throw RecipeError("skill nodes cannot nest");
        validate(c);
      }
      break;
    case NodeKind::skill_root:
      for (const auto& c : node.children) {
        if (c.kind != NodeKind::skill) throw RecipeError("SkillRoot children must be skills");
        validate(c);
      }
      break;
  }
}

// --- parser -----------------------------------------------------------------

namespace {

struct Token {
  enum Kind { lparen, rparen, word, end } kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) {
      cur_ = {Token::end, {}, pos_};
      return;
    }
    char c = src_[pos_];
    if (c == '(' || c == ')') {
      cur_ = {c == '(' ? Token::lparen : Token::rparen, src_.substr(pos_, 1), pos_};
      ++pos_;
      return;
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')')
      ++pos_;
    cur_ = {Token::word, src_.substr(start, pos_ - start), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_{Token::end, {}, 0};
};

std::optional<NodeKind> operator_kind(std::string_view w) {
  if (w == "THEN") return NodeKind::then_node;
  if (w == "AND") return NodeKind::and_node;
  if (w == "OR") return NodeKind::or_node;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src), src_size_(src.size()) {}

  TaskNode parse() {
    if (lex_.peek().kind == Token::end) throw RecipeError("empty recipe", 0);
    TaskNode root = expr();
    const Token& t = lex_.peek();
    if (t.kind == Token::rparen) throw RecipeError("unbalanced ')'", t.pos);
    if (t.kind != Token::end) {
      if (t.kind == Token::word && operator_kind(t.text))
        throw RecipeError("operator outside parentheses; wrap the whole expression", t.pos);
      throw RecipeError("unexpected '" + std::string(t.text) + "' after expression", t.pos);
    }
    assign_ids(root);
    return root;
  }

 private:
  TaskNode expr() {
    Token open = lex_.take();
    if (open.kind == Token::end) throw RecipeError("unbalanced '(': input ended", src_size_);
    if (open.kind != Token::lparen)
      throw RecipeError("expected '(' but found '" + std::string(open.text) + "'", open.pos);

    if (lex_.peek().kind == Token::word) return leaf_body(open);

    std::vector<TaskNode> children;
    children.push_back(expr());
    std::optional<NodeKind> kind;
    std::string_view first_op;
    while (true) {
      Token t = lex_.take();
      if (t.kind == Token::rparen) break;
      if (t.kind == Token::end) throw RecipeError("unbalanced '(': missing ')'", open.pos);
      if (t.kind != Token::word)
        throw RecipeError("expected THEN, AND or OR before '('", t.pos);
      auto op = operator_kind(t.text);
      if (!op) throw RecipeError("unknown operator '" + std::string(t.text) + "'", t.pos);
      if (kind && *kind != *op)
        throw RecipeError("mixed operators " + std::string(first_op) + " and " +
                              std::string(t.text) + " at one level; add parentheses",
                          t.pos);
      if (!kind) first_op = t.text;
      kind = op;
      children.push_back(expr());
    }
    if (!kind) throw RecipeError("parenthesized group needs an operator", open.pos);
    TaskNode n;
    n.kind = *kind;
    n.children = std::move(children);
    return n;
  }

  TaskNode leaf_body(const Token& open) {
    Token verb = lex_.take();
    auto action = parse_action(verb.text);
    if (!action) {
      if (operator_kind(verb.text))
        throw RecipeError("operator '" + std::string(verb.text) + "' without a left operand",
                          verb.pos);
      throw RecipeError("unknown action '" + std::string(verb.text) + "'", verb.pos);
    }
    Token obj = lex_.take();
    if (obj.kind != Token::word || !is_ident(obj.text))
      throw RecipeError("expected object name after " + std::string(verb.text), obj.pos);
    Token close = lex_.take();
    if (close.kind == Token::end) throw RecipeError("unbalanced '(': missing ')'", open.pos);
    if (close.kind != Token::rparen)
      throw RecipeError("expected ')' after object name", close.pos);
    return leaf(std::string(obj.text), *action);
  }

  Lexer lex_;
  std::size_t src_size_;
};

void serialize_into(const TaskNode& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::object_leaf:
      out += '(';
      out += to_string(n.action);
      out += ' ';
      out += n.name;
      out += ')';
      return;
    case NodeKind::then_node:
    case NodeKind::and_node:
    case NodeKind::or_node: {
      out += '(';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) {
          out += ' ';
          out += to_string(n.kind);
          out += ' ';
        }
        serialize_into(n.children[i], out);
      }
      out += ')';
      return;
    }
    case NodeKind::skill:
    case NodeKind::skill_root:
      throw RecipeError("only recipe bodies serialize; got " + std::string(to_string(n.kind)));
  }
}

}  // namespace

TaskNode parse_recipe(std::string_view text) {
  TaskNode t = Parser(text).parse();
  validate(t);
  return t;
}

std::string serialize_recipe(const TaskNode& tree) {
  std::string out;
  serialize_into(tree, out);
  return out;
}

RecipeFile parse_recipe_file(std::string_view text, const std::string& source_name) {
  std::size_t nl = text.find('\n');
  std::string_view first = trim(text.substr(0, nl));
  constexpr std::string_view key = "skill:";
  if (!first.starts_with(key))
    throw RecipeError(source_name + ": first line must be 'skill: <Name>'");
  std::string name{trim(first.substr(key.size()))};
  if (!is_ident(name)) throw RecipeError(source_name + ": invalid skill name '" + name + "'");
  std::string_view body = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  try {
    return {name, parse_recipe(body)};
  } catch (const RecipeError& e) {
    throw RecipeError(source_name + ": " + e.what());
  }
}

RecipeFile load_recipe_file(const std::string& path) {
  return parse_recipe_file(read_file(path), path);
}

}  // namespace cogtask::recipe
