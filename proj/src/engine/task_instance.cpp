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

#include <algorithm>
#include <cstdio>
#include <set>

#include "cogtask/task_engine.hpp"

namespace cogtask::engine {

using recipe::NodeKind;

namespace {

std::string fmt_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

TaskInstance::TaskInstance(const recipe::SkillLibrary& lib, std::vector<std::string> robot_ids,
                           EngineConfig config)
    : robots_(std::move(robot_ids)), config_(config) {
  if (lib.empty()) throw std::invalid_argument("task instance needs at least one skill");
  if (robots_.empty()) throw std::invalid_argument("task instance needs at least one robot");
  if (std::set<std::string>(robots_.begin(), robots_.end()).size() != robots_.size())
    throw std::invalid_argument("duplicate robot id");
  if (!(config_.threshold > 0.0 && config_.threshold <= 1.0))
    throw std::invalid_argument("threshold must be in (0, 1]");
  if (config_.stall_limit < 1) throw std::invalid_argument("stall limit must be >= 1");

  nodes_.push_back({NodeKind::skill_root, "SkillRoot", {}, {}, -1, {}});
  for (const auto& name : lib.names()) {
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({NodeKind::skill, name, {}, name, 0, {}});
    nodes_[0].children.push_back(id);
    int body = flatten(lib.skill(name), id, name);  // grows nodes_, so index afterwards
    nodes_[static_cast<std::size_t>(id)].children.push_back(body);
  }
  replicas_.assign(robots_.size(), std::vector<NodeState>(nodes_.size()));
  or_latch_.assign(robots_.size(), std::vector<OrLatch>(nodes_.size()));
}

TaskInstance TaskInstance::for_world(const recipe::SkillLibrary& lib,
                                     const world::WorldState& world, EngineConfig config) {
  std::vector<std::string> ids;
  for (const auto& [id, _] : world.robots()) ids.push_back(id);
  return TaskInstance(lib, std::move(ids), config);
}

int TaskInstance::flatten(const recipe::TaskNode& n, int parent, const std::string& skill) {
  int id = static_cast<int>(nodes_.size());
  FlatNode flat;
  flat.kind = n.kind;
  flat.parent = parent;
  flat.skill = skill;
  if (n.kind == NodeKind::object_leaf) {
    flat.label = n.name;
    flat.object = n.name;
  } else {
    flat.label = std::string(recipe::to_string(n.kind)) + "#" + std::to_string(id);
  }
  nodes_.push_back(std::move(flat));
  for (const auto& c : n.children) {
    int child = flatten(c, id, skill);
    nodes_[static_cast<std::size_t>(id)].children.push_back(child);
  }
  return id;
}

void TaskInstance::choose(const std::string& skill, std::string_view detail) {
  if (chosen_skill_) throw std::logic_error("skill already chosen for this instance");
  auto node = skill_node(skill);
  if (!node) throw std::invalid_argument("'" + skill + "' is not a skill under the root");
  chosen_skill_ = skill;
  chosen_node_ = *node;
  std::string d = "seed=" + std::to_string(config_.seed);
  if (!detail.empty()) d = std::string(detail) + " " + d;
  pending_.push_back({tick_, std::string(kAllRobots), skill, EventKind::skill_chosen, d});
}

std::optional<int> TaskInstance::find_node(std::string_view label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].label == label) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> TaskInstance::skill_node(const std::string& skill) const {
  for (int c : nodes_[0].children)
    if (nodes_[static_cast<std::size_t>(c)].label == skill) return c;
  return std::nullopt;
}

std::vector<int> TaskInstance::chosen_subtree() const {
  std::vector<int> out;
  if (chosen_node_ < 0) return out;
  std::vector<int> stack{chosen_node_};
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    out.push_back(n);
    const auto& ch = nodes_[static_cast<std::size_t>(n)].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> TaskInstance::or_choice(std::size_t replica, int or_node) const {
  int c = or_latch_.at(replica).at(static_cast<std::size_t>(or_node)).child;
  if (c < 0) return std::nullopt;
  return c;
}

std::optional<std::string> TaskInstance::claimant(int leaf) const {
  auto it = claims_.find(leaf);
  if (it == claims_.end()) return std::nullopt;
  return it->second;
}

std::vector<StatusMessage> TaskInstance::update_activation_potential(
    std::size_t replica, const world::WorldState& world) {
  auto& rep = replicas_.at(replica);
  std::vector<StatusMessage> messages;
  // Preorder ids: every child has a larger id than its parent.
  for (int n = static_cast<int>(nodes_.size()) - 1; n >= 0; --n) {
    const FlatNode& node = nodes_[static_cast<std::size_t>(n)];
    NodeState& st = rep[static_cast<std::size_t>(n)];
    auto pot = [&](int c) { return rep[static_cast<std::size_t>(c)].activation_potential; };
    auto done = [&](int c) { return rep[static_cast<std::size_t>(c)].done; };
    double p = 0.0;
    if (!st.done) {
      switch (node.kind) {
        case NodeKind::object_leaf:
          p = world.perceivable(node.object) ? 1.0 : 0.0;
          break;
        case NodeKind::then_node:
        case NodeKind::skill:
          for (int c : node.children)
            if (!done(c)) {
              p = pot(c);
              break;
            }
          break;
        case NodeKind::and_node: {
          bool any = false;
          for (int c : node.children)
            if (!done(c)) {
              p = any ? std::min(p, pot(c)) : pot(c);
              any = true;
            }
          break;
        }
        case NodeKind::or_node:
          for (int c : node.children) p = std::max(p, pot(c));
          break;
        case NodeKind::skill_root:
          if (chosen_node_ >= 0) p = pot(chosen_node_);
          break;
      }
    }
    st.activation_potential = p;
    if (node.parent >= 0) messages.push_back({n, node.parent, p, st.done, st.active});
  }
  return messages;
}

void TaskInstance::select_or_children(std::size_t replica) {
  auto& rep = replicas_[replica];
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const FlatNode& node = nodes_[n];
    if (node.kind != NodeKind::or_node || rep[n].done) continue;
    OrLatch& latch = or_latch_[replica][n];
    bool reselect = false;
    if (latch.child >= 0) {
      const NodeState& cs = rep[static_cast<std::size_t>(latch.child)];
      if (cs.done || cs.activation_potential > 0.0) continue;
      reselect = true;
      latch = {};
    }
    int best = -1;
    double best_p = 0.0;
    int ties = 0;
    for (int c : node.children) {
      const NodeState& cs = rep[static_cast<std::size_t>(c)];
      if (cs.done || !(cs.activation_potential > 0.0)) continue;
      if (best < 0 || cs.activation_potential > best_p) {
        best = c;
        best_p = cs.activation_potential;
        ties = 1;
      } else if (cs.activation_potential == best_p) {
        ++ties;
      }
    }
    if (best >= 0) latch = {best, ties > 1, reselect};
  }
}

std::vector<ActivationMessage> TaskInstance::spread_activation(std::size_t replica) {
  if (chosen_node_ < 0) throw std::logic_error("spread_activation before a skill is chosen");
  auto& rep = replicas_.at(replica);
  for (auto& st : rep) st.activation_level = 0.0;
  std::vector<ActivationMessage> messages;
  if (rep[0].done) return messages;

  const double threshold = config_.threshold;
  auto send = [&](int from, int to, double level, auto& self) -> void {
    rep[static_cast<std::size_t>(to)].activation_level = level;
    messages.push_back({from, to, level});
    self(to, self);
  };
  auto visit = [&](int n, auto& self) -> void {
    const FlatNode& node = nodes_[static_cast<std::size_t>(n)];
    const NodeState& st = rep[static_cast<std::size_t>(n)];
    if (!(st.activation_level > threshold) || st.done) return;
    const double level = st.activation_level;
    auto done = [&](int c) { return rep[static_cast<std::size_t>(c)].done; };
    switch (node.kind) {
      case NodeKind::skill_root:
        // Only the chosen skill hears from the root.
        send(n, chosen_node_, 1.0, self);
        break;
      case NodeKind::skill:
      case NodeKind::and_node:
        for (int c : node.children)
          if (!done(c)) send(n, c, level, self);
        break;
      case NodeKind::then_node:
        for (int c : node.children)
          if (!done(c)) {
            send(n, c, level, self);
            break;
          }
        break;
      case NodeKind::or_node: {
        int c = or_latch_[replica][static_cast<std::size_t>(n)].child;
        if (c >= 0 && !done(c)) send(n, c, level, self);
        break;
      }
      case NodeKind::object_leaf:
        break;
    }
  };
  rep[0].activation_level = 1.0;
  visit(0, visit);
  return messages;
}

void TaskInstance::refresh_active(std::size_t replica, std::vector<Event>* events) {
  auto& rep = replicas_[replica];
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    NodeState& st = rep[n];
    bool now = st.activation_level > config_.threshold && !st.done;
    if (now && !st.active && events) {
      std::string detail = "level=" + fmt_real(st.activation_level);
      int parent = nodes_[n].parent;
      if (parent >= 0 && nodes_[static_cast<std::size_t>(parent)].kind == NodeKind::or_node) {
        const OrLatch& latch = or_latch_[replica][static_cast<std::size_t>(parent)];
        detail += " selected_by=" + nodes_[static_cast<std::size_t>(parent)].label;
        detail += latch.reselected ? " reselected" : latch.tie ? " tie=leftmost" : " max_potential";
      }
      events->push_back({tick_, robots_[replica], nodes_[n].label, EventKind::activated, detail});
    }
    st.active = now;
  }
}

bool TaskInstance::leaf_claimable(std::size_t replica, int leaf) const {
  const FlatNode& node = nodes_[static_cast<std::size_t>(leaf)];
  const NodeState& st = replicas_[replica][static_cast<std::size_t>(leaf)];
  return node.kind == NodeKind::object_leaf && st.active && !st.done &&
         st.activation_potential > 0.0 && !claims_.count(leaf);
}

void TaskInstance::mark_done(int node, std::string_view robot, std::vector<Event>& events) {
  for (auto& rep : replicas_) rep[static_cast<std::size_t>(node)].done = true;
  events.push_back({tick_, std::string(robot), nodes_[static_cast<std::size_t>(node)].label,
                    EventKind::node_done, ""});
}

std::vector<Event> TaskInstance::take_pending_events() {
  std::vector<Event> out;
  out.swap(pending_);
  return out;
}

std::vector<Event> TaskInstance::tick(world::WorldState& world) {
  if (chosen_node_ < 0) throw std::logic_error("tick before a skill is chosen");
  std::vector<Event> events = take_pending_events();
  if (halted_ || root_done()) return events;
  ++tick_;

  const std::size_t R = replicas_.size();
  for (std::size_t r = 0; r < R; ++r) update_activation_potential(r, world);
  for (std::size_t r = 0; r < R; ++r) select_or_children(r);
  for (std::size_t r = 0; r < R; ++r) spread_activation(r);
  for (std::size_t r = 0; r < R; ++r) refresh_active(r, &events);

  bool progress = false;
  for (std::size_t r = 0; r < R; ++r) {
    const std::string& robot_id = robots_[r];
    if (world.robot(robot_id).busy) continue;
    int best = -1;
    int ties = 0;
    for (int n = 0; n < static_cast<int>(nodes_.size()); ++n) {
      if (!leaf_claimable(r, n)) continue;
      double p = replicas_[r][static_cast<std::size_t>(n)].activation_potential;
      double bp = best < 0 ? 0.0 : replicas_[r][static_cast<std::size_t>(best)].activation_potential;
      if (best < 0 || p > bp) {
        best = n;
        ties = 1;
      } else if (p == bp) {
        ++ties;
      }
    }
    if (best < 0) continue;
    const FlatNode& leaf = nodes_[static_cast<std::size_t>(best)];
    const world::WorldObject* obj = world.find_object(leaf.object);
    world::Pose target = obj ? obj->pose : world::Pose{};
    if (auto it = world.place_targets().find(leaf.skill); it != world.place_targets().end())
      target = it->second;
    world::ActionHandle h;
    try {
      h = world.pick_and_place(robot_id, leaf.object, target);
    } catch (const world::WorldError&) {
      continue;
    }
    claims_[best] = robot_id;
    in_flight_[h.id] = best;
    progress = true;
    std::string why = "potential=" +
                      fmt_real(replicas_[r][static_cast<std::size_t>(best)].activation_potential) +
                      (ties > 1 ? " tie=leaf_order" : "");
    events.push_back({tick_, robot_id, leaf.label, EventKind::claimed, why});
    events.push_back({tick_, robot_id, leaf.label, EventKind::action_started,
                      "PicknPlace " + leaf.object + " duration=" + std::to_string(h.finish - h.start)});
  }

  for (const auto& notice : world.advance()) {
    auto it = in_flight_.find(notice.action_id);
    if (it == in_flight_.end()) continue;
    int leaf = it->second;
    in_flight_.erase(it);
    progress = true;
    events.push_back({tick_, notice.robot, nodes_[static_cast<std::size_t>(leaf)].label,
                      EventKind::action_done, "PicknPlace " + notice.object});
    mark_done(leaf, notice.robot, events);
  }

  // Done flags are shared, so replica 0 is authoritative here.
  const auto& rep = replicas_[0];
  for (int n = static_cast<int>(nodes_.size()) - 1; n >= 0; --n) {
    const FlatNode& node = nodes_[static_cast<std::size_t>(n)];
    if (rep[static_cast<std::size_t>(n)].done || node.kind == NodeKind::object_leaf) continue;
    auto done = [&](int c) { return rep[static_cast<std::size_t>(c)].done; };
    bool finished = false;
    switch (node.kind) {
      case NodeKind::then_node:
      case NodeKind::and_node:
      case NodeKind::skill:
        finished = std::all_of(node.children.begin(), node.children.end(), done);
        break;
      case NodeKind::or_node:
        finished = std::any_of(node.children.begin(), node.children.end(), done);
        break;
      case NodeKind::skill_root:
        finished = done(chosen_node_);
        break;
      case NodeKind::object_leaf:
        break;
    }
    if (finished) mark_done(n, kAllRobots, events);
  }
  for (std::size_t r = 0; r < R; ++r) refresh_active(r, nullptr);

  if (!root_done()) {
    stalled_for_ = (progress || !world.idle()) ? 0 : stalled_for_ + 1;
    if (stalled_for_ >= config_.stall_limit) {
      std::string detail = "no progress for " + std::to_string(stalled_for_) + " ticks";
      auto missing = missing_objects(world);
      if (!missing.empty()) {
        detail += " missing=";
        for (std::size_t i = 0; i < missing.size(); ++i) detail += (i ? "," : "") + missing[i];
      }
      events.push_back({tick_, std::string(kAllRobots), nodes_[0].label, EventKind::deadlock, detail});
      halted_ = true;
    }
  }
  return events;
}

std::vector<std::string> TaskInstance::missing_objects(const world::WorldState& world) const {
  std::vector<std::string> out;
  auto add = [&](const std::string& obj) {
    if (std::find(out.begin(), out.end(), obj) == out.end()) out.push_back(obj);
  };
  const auto& rep = replicas_[0];
  for (int n : chosen_subtree()) {
    const FlatNode& node = nodes_[static_cast<std::size_t>(n)];
    const NodeState& st = rep[static_cast<std::size_t>(n)];
    if (!st.active || st.done) continue;
    if (node.kind == NodeKind::object_leaf && !world.perceivable(node.object)) add(node.object);
    if (node.kind == NodeKind::or_node && or_latch_[0][static_cast<std::size_t>(n)].child < 0) {
      std::vector<int> stack(node.children.begin(), node.children.end());
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        const FlatNode& cn = nodes_[static_cast<std::size_t>(c)];
        if (rep[static_cast<std::size_t>(c)].done) continue;
        if (cn.kind == NodeKind::object_leaf && !world.perceivable(cn.object)) add(cn.object);
        stack.insert(stack.end(), cn.children.begin(), cn.children.end());
      }
    }
  }
  return out;
}

ExecutionTrace run_until_done(TaskInstance& instance, world::WorldState& world,
                              std::uint64_t max_ticks) {
  if (max_ticks == 0) throw std::invalid_argument("max_ticks must be >= 1");
  if (!instance.chosen_skill()) throw std::logic_error("run_until_done needs a chosen skill");
  ExecutionTrace trace;
  trace.events = instance.take_pending_events();
  std::uint64_t ran = 0;
  while (!instance.root_done() && !instance.halted() && ran < max_ticks) {
    auto ev = instance.tick(world);
    trace.events.insert(trace.events.end(), ev.begin(), ev.end());
    ++ran;
  }
  trace.ticks = instance.tick_count();
  if (instance.root_done()) {
    trace.outcome = Outcome::completed;
  } else if (instance.halted()) {
    trace.outcome = Outcome::deadlock;
    trace.missing_objects = instance.missing_objects(world);
  } else {
    trace.outcome = Outcome::timeout;
    trace.missing_objects = instance.missing_objects(world);
    std::string detail = "max_ticks=" + std::to_string(max_ticks);
    trace.events.push_back({instance.tick_count(), std::string(kAllRobots), "SkillRoot",
                            EventKind::timeout, detail});
    instance.halt();
  }
  return trace;
}

}  // namespace cogtask::engine
