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

#include <string>
#include <string_view>
#include <vector>

namespace cogtask {

/// Canonical form of a knowledge label: lowercase, trimmed, runs of internal
/// whitespace collapsed to a single underscore. "  Green  Tea " -> "green_tea".
std::string normalize_label(std::string_view raw);

/// Lemma used to look up a table object in semantic memory. Object names
/// carry instance suffixes ("Bread1", "Bread2") that the knowledge base does
/// not know about, so trailing digits are dropped before normalizing.
std::string object_category(std::string_view object_name);

std::string_view trim(std::string_view s);

/// Splits on a single delimiter character, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char delim);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace cogtask
