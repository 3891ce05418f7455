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

#include "cogtask/trace.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cogtask::engine {

namespace {
constexpr std::string_view kEventNames[] = {"activated",   "claimed",   "action_started",
                                            "action_done", "node_done", "skill_chosen",
                                            "deadlock",    "timeout"};
}

std::string_view to_string(EventKind kind) { return kEventNames[static_cast<int>(kind)]; }

std::optional<EventKind> parse_event_kind(std::string_view s) {
  for (std::size_t i = 0; i < std::size(kEventNames); ++i)
    if (kEventNames[i] == s) return static_cast<EventKind>(i);
  return std::nullopt;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::completed: return "completed";
    case Outcome::deadlock: return "deadlock";
    case Outcome::timeout: return "timeout";
  }
  return "?";
}

void write_jsonl(const std::vector<Event>& events, std::ostream& out) {
  for (const auto& e : events) {
    nlohmann::ordered_json j;
    j["tick"] = e.tick;
    j["robot"] = e.robot;
    j["node"] = e.node;
    j["event"] = to_string(e.event);
    j["detail"] = e.detail;
    out << j.dump() << '\n';
  }
}

std::string to_jsonl(const std::vector<Event>& events) {
  std::ostringstream ss;
  write_jsonl(events, ss);
  return ss.str();
}

std::vector<Event> read_jsonl(std::istream& in) {
  std::vector<Event> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    auto kind = parse_event_kind(j.at("event").get<std::string>());
    if (!kind) throw std::invalid_argument("trace line " + std::to_string(n) + ": unknown event");
    out.push_back({j.at("tick").get<std::uint64_t>(), j.at("robot").get<std::string>(),
                   j.at("node").get<std::string>(), *kind, j.at("detail").get<std::string>()});
  }
  return out;
}

}  // namespace cogtask::engine
