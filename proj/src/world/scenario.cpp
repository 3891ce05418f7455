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

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>

#include "cogtask/labels.hpp"
#include "cogtask/world.hpp"

namespace cogtask::world {

namespace {

struct Section {
  std::string kind;
  std::size_t line = 0;
  std::map<std::string, std::pair<std::string, std::size_t>> fields;
};

class SectionReader {
 public:
  SectionReader(const Section& s, const std::string& src) : s_(s), src_(src) {}

  std::string text(const std::string& key) const {
    auto it = s_.fields.find(key);
    if (it == s_.fields.end()) throw ScenarioError(src_, s_.line, "[" + s_.kind + "] missing '" + key + "'");
    if (it->second.first.empty()) throw ScenarioError(src_, it->second.second, "empty '" + key + "'");
    return it->second.first;
  }

  double number(const std::string& key) const {
    std::string v = text(key);
    double out = 0.0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out))
      throw ScenarioError(src_, line_of(key), "malformed number for '" + key + "': " + v);
    return out;
  }

  int integer(const std::string& key) const {
    std::string v = text(key);
    int out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size())
      throw ScenarioError(src_, line_of(key), "malformed integer for '" + key + "': " + v);
    return out;
  }

  bool flag(const std::string& key, bool fallback) const {
    if (!s_.fields.count(key)) return fallback;
    std::string v = text(key);
    if (v == "true") return true;
    if (v == "false") return false;
    throw ScenarioError(src_, line_of(key), "expected true or false for '" + key + "'");
  }

  Pose pose() const { return {number("x"), number("y"), number("z")}; }

  void only(std::initializer_list<std::string_view> allowed) const {
    for (const auto& [k, v] : s_.fields) {
      bool ok = false;
      for (auto a : allowed) ok = ok || a == k;
      if (!ok) throw ScenarioError(src_, v.second, "unknown key '" + k + "' in [" + s_.kind + "]");
    }
  }

 private:
  std::size_t line_of(const std::string& key) const { return s_.fields.at(key).second; }
  const Section& s_;
  const std::string& src_;
};

std::string unquote(std::string_view v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
  return std::string(v);
}

}  // namespace

WorldState parse_scenario(std::istream& in, const std::string& source_name) {
  std::vector<Section> sections;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ScenarioError(source_name, line_no, "unterminated section header");
      std::string kind{trim(line.substr(1, line.size() - 2))};
      if (kind != "object" && kind != "robot" && kind != "place_target")
        throw ScenarioError(source_name, line_no, "unknown section [" + kind + "]");
      sections.push_back({kind, line_no, {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ScenarioError(source_name, line_no, "expected key = value");
    if (sections.empty()) throw ScenarioError(source_name, line_no, "key outside of a section");
    std::string key{trim(line.substr(0, eq))};
    std::string value = unquote(trim(line.substr(eq + 1)));
    if (!sections.back().fields.emplace(key, std::make_pair(value, line_no)).second)
      throw ScenarioError(source_name, line_no, "key '" + key + "' given twice");
  }

  WorldState world;
  for (const auto& s : sections) {
    SectionReader r(s, source_name);
    try {
      if (s.kind == "object") {
        r.only({"name", "tag", "x", "y", "z", "present"});
        WorldObject o;
        o.name = r.text("name");
        o.tag_id = r.integer("tag");
        o.pose = r.pose();
        o.present = r.flag("present", true);
        world.add_object(std::move(o));
      } else if (s.kind == "robot") {
        r.only({"id", "x", "y", "z", "speed"});
        RobotSim robot;
        robot.id = r.text("id");
        robot.arm_pose = r.pose();
        robot.speed = r.number("speed");
        world.add_robot(std::move(robot));
      } else {
        r.only({"skill", "x", "y", "z"});
        world.set_place_target(r.text("skill"), r.pose());
      }
    } catch (const WorldError& e) {
      throw ScenarioError(source_name, s.line, e.what());
    }
  }
  return world;
}

WorldState load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path, 0, "cannot open file");
  return parse_scenario(in, path);
}

}  // namespace cogtask::world
