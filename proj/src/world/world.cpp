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
#include <cmath>
#include <cstdio>
#include <set>

#include "cogtask/world.hpp"

namespace cogtask::world {

double distance(const Pose& a, const Pose& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

Tick pick_and_place_duration(const Pose& arm, const Pose& object, const Pose& target,
                             double speed) {
  if (!(speed > 0.0)) throw WorldError("robot speed must be positive");
  double travel = (distance(arm, object) + distance(object, target)) / speed;
  // Absorb rounding so that exact multiples do not spill into an extra tick.
  double moves = std::ceil(travel - 1e-9);
  return static_cast<Tick>(std::max(0.0, moves)) + 1;
}

void WorldState::add_object(WorldObject obj) {
  if (obj.name.empty()) throw WorldError("object without a name");
  if (objects_.count(obj.name)) throw WorldError("duplicate object '" + obj.name + "'");
  for (const auto& [_, o] : objects_)
    if (o.tag_id == obj.tag_id)
      throw WorldError("tag " + std::to_string(obj.tag_id) + " used by both '" + o.name +
                       "' and '" + obj.name + "'");
  if (obj.consumed && !obj.present) throw WorldError("object '" + obj.name + "' consumed but never present");
  objects_.emplace(obj.name, std::move(obj));
}

void WorldState::add_robot(RobotSim robot) {
  if (robot.id.empty()) throw WorldError("robot without an id");
  if (robots_.count(robot.id)) throw WorldError("duplicate robot '" + robot.id + "'");
  if (!(robot.speed > 0.0)) throw WorldError("robot '" + robot.id + "' needs a positive speed");
  robots_.emplace(robot.id, std::move(robot));
}

void WorldState::set_place_target(const std::string& skill, Pose pose) {
  if (!place_targets_.emplace(skill, pose).second)
    throw WorldError("duplicate place target for skill '" + skill + "'");
}

const WorldObject* WorldState::find_object(std::string_view name) const {
  auto it = objects_.find(std::string(name));
  return it == objects_.end() ? nullptr : &it->second;
}

const RobotSim& WorldState::robot(const std::string& id) const {
  auto it = robots_.find(id);
  if (it == robots_.end()) throw WorldError("unknown robot '" + id + "'");
  return it->second;
}

std::vector<PerceivedObject> WorldState::perceive() const {
  std::vector<PerceivedObject> out;
  for (const auto& [name, o] : objects_)
    if (o.present && !o.consumed) out.push_back({o.name, o.tag_id, o.pose});
  std::sort(out.begin(), out.end(),
            [](const PerceivedObject& a, const PerceivedObject& b) { return a.tag_id < b.tag_id; });
  return out;
}

bool WorldState::perceivable(std::string_view name) const {
  const WorldObject* o = find_object(name);
  return o && o->present && !o->consumed;
}

ActionHandle WorldState::pick_and_place(const std::string& robot_id, const std::string& object,
                                        const Pose& target) {
  auto rit = robots_.find(robot_id);
  if (rit == robots_.end()) throw WorldError("unknown robot '" + robot_id + "'");
  RobotSim& robot = rit->second;
  if (robot.busy) throw ActionRejected("robot '" + robot_id + "' is busy");
  auto oit = objects_.find(object);
  if (oit == objects_.end() || !oit->second.present || oit->second.consumed)
    throw MissingObject(object);
  for (const auto& p : pending_)
    if (p.object == object) throw MissingObject(object);

  ActionHandle h;
  h.id = next_action_++;
  h.robot = robot_id;
  h.object = object;
  h.start = clock_;
  h.finish = clock_ + pick_and_place_duration(robot.arm_pose, oit->second.pose, target, robot.speed);
  h.target = target;
  robot.busy = true;
  robot.holding = object;
  pending_.push_back(h);
  return h;
}

std::vector<CompletionNotice> WorldState::advance() {
  ++clock_;
  std::vector<ActionHandle> done;
  std::vector<ActionHandle> still;
  for (auto& p : pending_) (p.finish <= clock_ ? done : still).push_back(p);
  pending_ = std::move(still);
  std::sort(done.begin(), done.end(), [](const ActionHandle& a, const ActionHandle& b) {
    return a.finish != b.finish ? a.finish < b.finish : a.id < b.id;
  });
  std::vector<CompletionNotice> notices;
  for (const auto& h : done) {
    WorldObject& obj = objects_.at(h.object);
    obj.pose = h.target;
    obj.consumed = true;
    RobotSim& robot = robots_.at(h.robot);
    robot.arm_pose = h.target;
    robot.busy = false;
    robot.holding.reset();
    notices.push_back({h.id, h.robot, h.object, clock_});
  }
  return notices;
}

bool WorldState::operator==(const WorldState& o) const {
  return objects_ == o.objects_ && robots_ == o.robots_ && place_targets_ == o.place_targets_ &&
         clock_ == o.clock_ && pending_.size() == o.pending_.size();
}

std::string describe(const WorldState& world) {
  std::string out;
  char buf[160];
  std::vector<const WorldObject*> objs;
  for (const auto& [_, o] : world.objects()) objs.push_back(&o);
  std::sort(objs.begin(), objs.end(),
            [](const WorldObject* a, const WorldObject* b) { return a->tag_id < b->tag_id; });
  std::snprintf(buf, sizeof buf, "tick %llu\n", static_cast<unsigned long long>(world.clock()));
  out += buf;
  for (const auto* o : objs) {
    const char* state = !o->present ? "absent" : o->consumed ? "consumed" : "on table";
    std::snprintf(buf, sizeof buf, "  [%2d] %-10s (%.3f, %.3f, %.3f)  %s\n", o->tag_id,
                  o->name.c_str(), o->pose.x, o->pose.y, o->pose.z, state);
    out += buf;
  }
  for (const auto& [id, r] : world.robots()) {
    std::snprintf(buf, sizeof buf, "  robot %s at (%.3f, %.3f, %.3f)%s\n", id.c_str(), r.arm_pose.x,
                  r.arm_pose.y, r.arm_pose.z, r.busy ? " busy" : "");
    out += buf;
  }
  return out;
}

}  // namespace cogtask::world
