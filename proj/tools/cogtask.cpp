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


#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cogtask/cli.hpp"

namespace cli = cogtask::cli;

int main(int argc, char** argv) {
  CLI::App app{"cogtask: utterance-driven tabletop task execution"};
  app.require_subcommand(1);

  cli::RunConfig cfg = cli::RunConfig::defaults();
  std::string utterance;
  std::vector<std::string> words;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--kb", cfg.kb, "semantic memory TSV")->envname("COGTASK_KB");
    sub->add_option("--skills", cfg.skills, "directory of .recipe files")->envname("COGTASK_SKILLS");
    sub->add_option("--scenario", cfg.scenario, "scenario file")->envname("COGTASK_SCENARIO");
    sub->add_option("--lingual", cfg.lingual, "lexicon/stopword directory")->envname("COGTASK_LINGUAL");
    sub->add_option("--templates", cfg.templates, "response templates")->envname("COGTASK_TEMPLATES");
    sub->add_option("--radius", cfg.radius, "neighborhood radius")->envname("COGTASK_RADIUS");
    sub->add_option("--threshold", cfg.threshold, "activation threshold")->envname("COGTASK_THRESHOLD");
    sub->add_option("--seed", cfg.seed, "seed recorded in the trace")->envname("COGTASK_SEED");
    sub->add_option("--max-ticks", cfg.max_ticks, "tick budget")->envname("COGTASK_MAX_TICKS");
    sub->add_option("--out", cfg.out, "trace (run) or matrix (score) output path")->envname("COGTASK_OUT");
  };

  auto* run = app.add_subcommand("run", "interpret one utterance and execute the chosen skill");
  add_common(run);
  run->add_option("--utterance,-u", utterance, "what the human said")->required()->envname("COGTASK_UTTERANCE");

  auto* repl = app.add_subcommand("repl", "interactive session");
  add_common(repl);

  auto* score = app.add_subcommand("score", "print the similarity matrix for words x perceived items");
  add_common(score);
  score->add_option("words", words, "tagged words");

  auto* validate = app.add_subcommand("validate", "check input files without running");
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitConfig;
  }

  if (*run) {
    cfg.mode = cli::Mode::run;
    return cli::cmd_run(cfg, utterance, std::cout, std::cerr);
  }
  if (*repl) {
    cfg.mode = cli::Mode::repl;
    return cli::cmd_repl(cfg, std::cin, std::cout, std::cerr);
  }
  if (*score) {
    cfg.mode = cli::Mode::score;
    return cli::cmd_score(cfg, words, std::cout, std::cerr);
  }
  cfg.mode = cli::Mode::validate;
  return cli::cmd_validate(cfg, std::cout, std::cerr);
}
