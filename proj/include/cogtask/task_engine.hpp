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

// Activation-spreading execution of a skill tree.
//
// The instance holds a SkillRoot whose children are the library's skills. Each
// robot owns a replica of the per-node state. A tick runs these phases in
// order, identically on every replica:
//
//   1. activation potential, bottom-up (leaf = object perceivable)
//   2. OR nodes latch a child (highest potential, leftmost on ties)
//   3. activation level, top-down from the root to the chosen skill only
//   4. active = level > threshold && !done
//   5. idle robots claim one active leaf each and start pick-and-place
//   6. finished world actions mark their leaf done on all replicas
//   7. internal nodes become done from their children
//
// Message rules inside a skill:
//   THEN  forwards to its leftmost unfinished child, reports that child's potential
//   AND   forwards to every unfinished child, reports their minimum potential
//   OR    forwards to its latched child, reports the maximum child potential
//   Skill forwards to its body and reports the body's potential
//   Root  forwards to the chosen skill only and reports its potential

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cogtask/recipe.hpp"
#include "cogtask/similarity.hpp"
#include "cogtask/trace.hpp"
#include "cogtask/world.hpp"

namespace cogtask::engine {

struct NodeState {
  double activation_level = 0.0;
  double activation_potential = 0.0;
  bool active = false;
  bool done = false;
  bool operator==(const NodeState&) const = default;
};

/// Parent -> child.
struct ActivationMessage {
  int from = 0;
  int to = 0;
  double activation_level = 0.0;
};

/// Child -> parent.
struct StatusMessage {
  int from = 0;
  int to = 0;
  double activation_potential = 0.0;
  bool done = false;
  bool active = false;
};

struct EngineConfig {
  double threshold = 0.5;
  /// Consecutive ticks without progress before a deadlock is declared.
  int stall_limit = 3;
  std::uint64_t seed = 0;
};

/// Preorder-flattened node of the instance tree. Node 0 is the SkillRoot.
struct FlatNode {
  recipe::NodeKind kind = recipe::NodeKind::object_leaf;
  std::string label;   // trace name: skill name, object name, or "THEN#3"
  std::string object;  // leaves only
  std::string skill;   // owning skill; empty for the root
  int parent = -1;
  std::vector<int> children;
};

class TaskInstance {
 public:
  /// Builds SkillRoot[Skill...] from the library in registration order with
  /// one replica per robot id. Throws std::invalid_argument when the library
  /// or robot list is empty.
  TaskInstance(const recipe::SkillLibrary& lib, std::vector<std::string> robot_ids,
               EngineConfig config = {});

  /// Replicas for every robot in the world, ordered by robot id.
  static TaskInstance for_world(const recipe::SkillLibrary& lib, const world::WorldState& world,
                                EngineConfig config = {});

  /// Sets the skill the root dispatches to and queues a skill_chosen event.
  /// Throws std::invalid_argument when `skill` is not a child of the root
  /// and std::logic_error when a skill was already chosen.
  void choose(const std::string& skill, std::string_view detail = {});

  const std::optional<std::string>& chosen_skill() const { return chosen_skill_; }
  const std::vector<FlatNode>& nodes() const { return nodes_; }
  const std::vector<std::string>& robots() const { return robots_; }
  const EngineConfig& config() const { return config_; }
  std::uint64_t tick_count() const { return tick_; }

  const NodeState& state(std::size_t replica, int node) const {
    return replicas_.at(replica).at(static_cast<std::size_t>(node));
  }
  std::span<const NodeState> replica(std::size_t r) const { return replicas_.at(r); }

  std::optional<int> find_node(std::string_view label) const;
  std::optional<int> skill_node(const std::string& skill) const;
  /// Nodes under the chosen skill, including the skill node itself.
  std::vector<int> chosen_subtree() const;

  std::optional<int> or_choice(std::size_t replica, int or_node) const;
  /// Robot that claimed the leaf, if any.
  std::optional<std::string> claimant(int leaf) const;
  bool root_done() const { return replicas_.front().front().done; }

  /// Phase 1 for one replica. Returns the status messages sent upward.
  std::vector<StatusMessage> update_activation_potential(std::size_t replica,
                                                         const world::WorldState& world);

  /// Phase 3 for one replica: clears levels, then floods from the root.
  /// Requires a chosen skill.
  std::vector<ActivationMessage> spread_activation(std::size_t replica);

  /// One full cycle. Advances the world clock by one tick.
  std::vector<Event> tick(world::WorldState& world);

  /// Events queued outside of tick() (skill_chosen); cleared on read.
  std::vector<Event> take_pending_events();

  bool halted() const { return halted_; }
  void halt() { halted_ = true; }

  /// Objects of active, unfinished leaves (or of the options of an active
  /// OR with nothing latched) that cannot currently be perceived.
  std::vector<std::string> missing_objects(const world::WorldState& world) const;

 private:
  int flatten(const recipe::TaskNode& n, int parent, const std::string& skill);
  void select_or_children(std::size_t replica);
  void refresh_active(std::size_t replica, std::vector<Event>* events);
  void mark_done(int node, std::string_view robot, std::vector<Event>& events);
  bool leaf_claimable(std::size_t replica, int leaf) const;

  std::vector<FlatNode> nodes_;
  std::vector<std::string> robots_;
  EngineConfig config_;
  std::optional<std::string> chosen_skill_;
  int chosen_node_ = -1;

  std::vector<std::vector<NodeState>> replicas_;
  struct OrLatch {
    int child = -1;
    bool tie = false;
    bool reselected = false;
  };
  std::vector<std::vector<OrLatch>> or_latch_;
  std::map<int, std::string> claims_;
  std::map<std::uint64_t, int> in_flight_;
  std::vector<Event> pending_;
  std::uint64_t tick_ = 0;
  int stalled_for_ = 0;
  bool halted_ = false;
};

/// Ticks until the root is done, a deadlock is detected, or max_ticks pass.
/// Throws std::invalid_argument when max_ticks is 0 and std::logic_error when
/// no skill has been chosen.
ExecutionTrace run_until_done(TaskInstance& instance, world::WorldState& world,
                              std::uint64_t max_ticks);

// --- skill choice -------------------------------------------------------------

/// The highest-scoring object belongs to no registered skill.
class UnknownObject : public std::runtime_error {
 public:
  explicit UnknownObject(const std::string& object)
      : std::runtime_error("object '" + object + "' is not used by any skill"), object_(object) {}
  const std::string& object() const { return object_; }

 private:
  std::string object_;
};

struct SkillChoice {
  std::string skill;
  std::string object;
  double score = 0.0;
  /// Tie-break and ambiguity notes for the trace.
  std::string note;
};

/// Argmax over `available` (first listed wins ties), then the first skill in
/// registration order whose tree uses that object. Throws
/// similarity::NoAssociation when every score is zero.
SkillChoice choose_skill(std::span<const similarity::ItemScore> scores,
                         std::span<const std::string> available, const recipe::SkillLibrary& lib);

}  // namespace cogtask::engine
