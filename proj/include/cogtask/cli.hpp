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
#include <stdexcept>
#include <string>
#include <vector>

namespace cogtask::cli {

enum class Mode { run, repl, score, validate };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNoAssociation = 2;
inline constexpr int kExitStalled = 3;

struct RunConfig {
  std::string kb;
  std::string skills;
  std::string scenario;
  /// Directory with lexicon.tsv, stopwords.txt and lemma_alias.tsv.
  std::string lingual;
  std::string templates;
  int radius = 1;
  double threshold = 0.5;
  std::uint64_t seed = 0;
  std::string out;
  Mode mode = Mode::run;
  std::uint64_t max_ticks = 1000;

  /// Paths under the shipped data directory.
  static RunConfig defaults();
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError for a radius below 1, a threshold outside (0,1] or a
/// missing input path.
void check_config(const RunConfig& config);

int cmd_run(const RunConfig& config, const std::string& utterance, std::ostream& out, std::ostream& err);
int cmd_repl(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_score(const RunConfig& config, const std::vector<std::string>& words, std::ostream& out,
              std::ostream& err);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cogtask::cli
