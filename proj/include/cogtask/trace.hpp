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
#include <string>
#include <string_view>
#include <vector>

namespace cogtask::engine {

enum class EventKind {
  activated,
  claimed,
  action_started,
  action_done,
  node_done,
  skill_chosen,
  deadlock,
  timeout,
};

std::string_view to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view s);

/// Robot field used for events that apply to every replica.
inline constexpr std::string_view kAllRobots = "*";

struct Event {
  std::uint64_t tick = 0;
  std::string robot;
  std::string node;
  EventKind event = EventKind::activated;
  std::string detail;
  bool operator==(const Event&) const = default;
};

enum class Outcome { completed, deadlock, timeout };

std::string_view to_string(Outcome outcome);

struct ExecutionTrace {
  std::vector<Event> events;
  Outcome outcome = Outcome::timeout;
  std::uint64_t ticks = 0;
  /// Objects the run was waiting for when it stalled or timed out.
  std::vector<std::string> missing_objects;
};

/// One JSON object per line with fields in the order tick, robot, node, event, detail.
void write_jsonl(const std::vector<Event>& events, std::ostream& out);
std::string to_jsonl(const std::vector<Event>& events);
std::vector<Event> read_jsonl(std::istream& in);

}  // namespace cogtask::engine
