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

#include <cctype>
#include <fstream>
#include <istream>

#include "cogtask/interaction.hpp"
#include "cogtask/labels.hpp"

namespace cogtask::interaction {

std::string_view to_string(Intent intent) {
  switch (intent) {
    case Intent::skill_started: return "skill_started";
    case Intent::no_association: return "no_association";
    case Intent::missing_object: return "missing_object";
    case Intent::done: return "done";
  }
  return "?";
}

std::optional<Intent> parse_intent(std::string_view s) {
  for (Intent i : {Intent::skill_started, Intent::no_association, Intent::missing_object, Intent::done})
    if (to_string(i) == s) return i;
  return std::nullopt;
}

std::string respond(std::string_view tmpl, const Slots& slots) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    char c = tmpl[i];
    if (c == '}') throw TemplateError("unmatched '}' in template");
    if (c != '{') {
      out.push_back(c);
      ++i;
      continue;
    }
    std::size_t close = tmpl.find('}', i + 1);
    if (close == std::string_view::npos) throw TemplateError("unterminated slot in template");
    std::string name{tmpl.substr(i + 1, close - i - 1)};
    auto it = slots.find(name);
    if (it == slots.end()) throw TemplateError("no value for slot {" + name + "}");
    out += it->second;
    i = close + 1;
  }
  return out;
}

void ResponseTemplates::set(Intent intent, std::string tmpl) { templates_[intent] = std::move(tmpl); }

const std::string& ResponseTemplates::get(Intent intent) const {
  auto it = templates_.find(intent);
  if (it == templates_.end())
    throw TemplateError("no template for intent " + std::string(to_string(intent)));
  return it->second;
}

std::string ResponseTemplates::respond(Intent intent, const Slots& slots) const {
  Slots filled = slots;
  if (auto it = filled.find("skill"); it != filled.end()) it->second = humanize(it->second);
  return interaction::respond(get(intent), filled);
}

ResponseTemplates parse_templates(std::istream& in, const std::string& source_name) {
  ResponseTemplates t;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw TemplateError(source_name + ":" + std::to_string(n) + ": expected intent<TAB>template");
    auto intent = parse_intent(trim(line.substr(0, tab)));
    if (!intent)
      throw TemplateError(source_name + ":" + std::to_string(n) + ": unknown intent '" +
                          std::string(line.substr(0, tab)) + "'");
    t.set(*intent, std::string(trim(line.substr(tab + 1))));
  }
  for (Intent i : {Intent::skill_started, Intent::no_association, Intent::missing_object, Intent::done})
    if (!t.has(i)) throw TemplateError(source_name + ": missing template for " + std::string(to_string(i)));
  return t;
}

ResponseTemplates load_templates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TemplateError("cannot open " + path);
  return parse_templates(in, path);
}

std::string humanize(std::string_view camel) {
  std::string out;
  for (std::size_t i = 0; i < camel.size(); ++i) {
    char c = camel[i];
    if (c == '_') {
      out.push_back(' ');
      continue;
    }
    if (i > 0 && std::isupper(static_cast<unsigned char>(c)) &&
        std::islower(static_cast<unsigned char>(camel[i - 1])))
      out.push_back(' ');
    out.push_back(c);
  }
  return out;
}

}  // namespace cogtask::interaction
