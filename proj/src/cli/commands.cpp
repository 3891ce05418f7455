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


#include "cogtask/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "cogtask/interaction.hpp"
#include "cogtask/labels.hpp"

namespace cogtask::cli {

namespace fs = std::filesystem;

RunConfig RunConfig::defaults() {
  const std::string data = COGTASK_DATA_DIR;
  RunConfig c;
  c.kb = data + "/kb/semantic_memory.tsv";
  c.skills = data + "/skills";
  c.scenario = data + "/scenarios/tea_1.scn";
  c.lingual = data + "/lingual";
  c.templates = data + "/nlg/templates.tsv";
  return c;
}

void check_config(const RunConfig& c) {
  if (c.radius < 1) throw ConfigError("radius must be >= 1");
  if (!(c.threshold > 0.0 && c.threshold <= 1.0)) throw ConfigError("threshold must be in (0,1]");
  if (c.max_ticks == 0) throw ConfigError("max ticks must be positive");
  auto need = [](const std::string& p, const char* what) {
    if (p.empty() || !fs::exists(p)) throw ConfigError(std::string(what) + " not found: " + p);
  };
  need(c.kb, "knowledge base");
  need(c.skills, "skills directory");
  need(c.lingual, "lingual directory");
  need(c.templates, "templates file");
  if (c.mode != Mode::validate) need(c.scenario, "scenario");
}

namespace {

struct Session {
  kb::KnowledgeBase kb;
  recipe::SkillLibrary skills;
  lingual::LingualResources lingual;
  interaction::ResponseTemplates templates;
  world::WorldState world;

  interaction::Resources resources() const { return {kb, skills, lingual, templates}; }
};

// Every loader error becomes a ConfigError so callers map it to one exit code.
Session load_session(const RunConfig& c) {
  check_config(c);
  try {
    return Session{kb::load_kb(c.kb), recipe::load_skills(c.skills), lingual::LingualResources::load(c.lingual),
                   interaction::load_templates(c.templates), world::load_scenario(c.scenario)};
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

interaction::PipelineConfig pipeline(const RunConfig& c) {
  interaction::PipelineConfig p;
  p.radius = c.radius;
  p.engine.threshold = c.threshold;
  p.engine.seed = c.seed;
  p.max_ticks = c.max_ticks;
  return p;
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void print_decision(const interaction::InteractionResult& r, std::ostream& out) {
  out << "tagged:";
  for (const auto& w : r.tagged_words) out << ' ' << w;
  out << '\n';
  if (r.decision) {
    const auto& d = *r.decision;
    out << "object: " << d.winning_object << " score=" << similarity::format_score(d.winning_score) << '\n';
    out << "skill: " << d.chosen_skill << '\n';
    out << "shares:\n";
    for (const auto& s : d.shares) out << "  " << s.item << '\t' << percent(s.score) << "%\n";
  }
  out << "status: " << interaction::to_string(r.status) << '\n';
  out << "response: " << r.response << '\n';
}

void print_compact_trace(const engine::ExecutionTrace& t, std::ostream& out) {
  for (const auto& e : t.events) {
    if (e.event == engine::EventKind::activated) continue;
    out << "  t=" << e.tick << ' ' << e.robot << ' ' << e.node << ' ' << engine::to_string(e.event);
    if (!e.detail.empty()) out << " (" << e.detail << ')';
    out << '\n';
  }
}

int exit_code(interaction::Status s) {
  switch (s) {
    case interaction::Status::completed: return kExitOk;
    case interaction::Status::no_association:
    case interaction::Status::unknown_object: return kExitNoAssociation;
    case interaction::Status::stalled: return kExitStalled;
  }
  return kExitConfig;
}

void write_trace(const std::string& path, const engine::ExecutionTrace& trace) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write " + path);
  engine::write_jsonl(trace.events, f);
}

constexpr const char* kReplHelp =
    "commands:\n"
    "  <utterance>  interpret and execute\n"
    "  :world       show the table\n"
    "  :reset       reload the scenario\n"
    "  :help        this text\n"
    "  :quit        leave\n";

}  // namespace

int cmd_run(const RunConfig& config, const std::string& utterance, std::ostream& out, std::ostream& err) {
  try {
    if (trim(utterance).empty()) throw ConfigError("empty utterance");
    Session s = load_session(config);
    auto result = interaction::handle_utterance(utterance, s.resources(), s.world, pipeline(config));
    print_decision(result, out);
    if (!config.out.empty()) write_trace(config.out, result.trace);
    return exit_code(result.status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int cmd_repl(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<Session> s;
  try {
    s.emplace(load_session(config));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  const auto cfg = pipeline(config);
  std::string line;
  out << "> " << std::flush;
  while (std::getline(in, line)) {
    std::string_view cmd = trim(line);
    if (cmd == ":quit") break;
    if (cmd.empty()) {
    } else if (cmd == ":world") {
      out << world::describe(s->world);
    } else if (cmd == ":reset") {
      s->world = world::load_scenario(config.scenario);
      out << "scenario reloaded\n";
    } else if (cmd.front() == ':') {
      out << kReplHelp;
    } else {
      try {
        auto r = interaction::handle_utterance(cmd, s->resources(), s->world, cfg);
        print_decision(r, out);
        print_compact_trace(r.trace, out);
      } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
      }
    }
    out << "> " << std::flush;
  }
  out << '\n';
  return kExitOk;
}

int cmd_score(const RunConfig& config, const std::vector<std::string>& words, std::ostream& out,
              std::ostream& err) {
  try {
    Session s = load_session(config);
    std::vector<std::string> rows;
    for (const auto& w : words) rows.push_back(s.lingual.aliases.lemma_of(normalize_label(w)));
    std::vector<std::string> items;
    for (const auto& p : s.world.perceive()) items.push_back(p.name);
    similarity::ScoreTable table =
        items.empty() ? similarity::ScoreTable{}
                      : similarity::score_matrix(s.kb, rows, items, similarity::SignatureOptions{config.radius, {}});
    if (config.out.empty()) {
      table.write_tsv(out);
    } else {
      std::ofstream f(config.out, std::ios::binary | std::ios::trunc);
      if (!f) throw ConfigError("cannot write " + config.out);
      table.write_tsv(f);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int failures = 0;
  auto check = [&](const std::string& what, auto&& fn) {
    try {
      fn();
      out << "ok    " << what << '\n';
    } catch (const std::exception& e) {
      ++failures;
      err << "FAIL  " << what << ": " << e.what() << '\n';
    }
  };
  try {
    check_config(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  check(config.kb, [&] {
    auto kb = kb::load_kb(config.kb);
    out << "      " << kb.node_count() << " nodes, " << kb.edge_count() << " edges\n";
  });
  check(config.skills, [&] {
    auto lib = recipe::load_skills(config.skills);
    for (const auto& n : lib.names()) out << "      skill " << n << '\n';
  });
  check(config.lingual, [&] { (void)lingual::LingualResources::load(config.lingual); });
  check(config.templates, [&] { (void)interaction::load_templates(config.templates); });
  if (!config.scenario.empty()) check(config.scenario, [&] { (void)world::load_scenario(config.scenario); });
  return failures == 0 ? kExitOk : kExitConfig;
}

}  // namespace cogtask::cli
