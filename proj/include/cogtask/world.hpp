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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cogtask::world {

using Tick = std::uint64_t;

/// Meters, table frame.
struct Pose {
  double x = 0.0, y = 0.0, z = 0.0;
  bool operator==(const Pose&) const = default;
};

double distance(const Pose& a, const Pose& b);

struct WorldObject {
  std::string name;
  int tag_id = 0;
  Pose pose;
  bool present = true;
  bool consumed = false;
  bool operator==(const WorldObject&) const = default;
};

struct RobotSim {
  std::string id;
  Pose arm_pose;
  double speed = 0.25;  // meters per tick
  bool busy = false;
  std::optional<std::string> holding;
  bool operator==(const RobotSim&) const = default;
};

struct PerceivedObject {
  std::string name;
  int tag_id = 0;
  Pose pose;
};

struct ActionHandle {
  std::uint64_t id = 0;
  std::string robot;
  std::string object;
  Tick start = 0;
  Tick finish = 0;
  Pose target;
};

struct CompletionNotice {
  std::uint64_t action_id = 0;
  std::string robot;
  std::string object;
  Tick tick = 0;
};

class WorldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// The robot is already executing an action.
class ActionRejected : public WorldError {
 public:
  using WorldError::WorldError;
};
/// The object is unknown, absent or already consumed.
class MissingObject : public WorldError {
 public:
  MissingObject(const std::string& object)
      : WorldError("object '" + object + "' is not on the table"), object_(object) {}
  const std::string& object() const { return object_; }

 private:
  std::string object_;
};

/// Ticks needed to reach the object, carry it to the target, plus one grasp tick.
Tick pick_and_place_duration(const Pose& arm, const Pose& object, const Pose& target, double speed);

/// Tabletop state advanced in discrete ticks. Objects change pose only when a
/// pick-and-place completes.
class WorldState {
 public:
  void add_object(WorldObject obj);
  void add_robot(RobotSim robot);
  void set_place_target(const std::string& skill, Pose pose);

  const std::map<std::string, WorldObject>& objects() const { return objects_; }
  const std::map<std::string, RobotSim>& robots() const { return robots_; }
  const std::map<std::string, Pose>& place_targets() const { return place_targets_; }
  const WorldObject* find_object(std::string_view name) const;
  const RobotSim& robot(const std::string& id) const;
  Tick clock() const { return clock_; }

  /// Present, unconsumed objects ordered by tag id.
  std::vector<PerceivedObject> perceive() const;
  bool perceivable(std::string_view name) const;

  /// Schedules a timed action. Throws ActionRejected when the robot is busy
  /// and MissingObject when the object cannot be picked.
  ActionHandle pick_and_place(const std::string& robot_id, const std::string& object,
                              const Pose& target);

  /// Advances the clock one tick and returns actions finished by then, each
  /// delivered once, ordered by finish tick then action id.
  std::vector<CompletionNotice> advance();

  bool idle() const { return pending_.empty(); }

  bool operator==(const WorldState&) const;

 private:
  std::map<std::string, WorldObject> objects_;
  std::map<std::string, RobotSim> robots_;
  std::map<std::string, Pose> place_targets_;
  std::vector<ActionHandle> pending_;
  std::uint64_t next_action_ = 1;
  Tick clock_ = 0;
};

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}
};

/// Scenario grammar (one item per section, `#` comments, blank lines ignored):
///
///   [object]          name, tag, x, y, z, optional present = true|false
///   [robot]           id, x, y, z, speed
///   [place_target]    skill, x, y, z
///
/// Each section body is `key = value` lines; values may be double-quoted.
WorldState parse_scenario(std::istream& in, const std::string& source_name = "<scenario>");
WorldState load_scenario(const std::string& path);

/// Human-readable table listing for the REPL.
std::string describe(const WorldState& world);

}  // namespace cogtask::world
