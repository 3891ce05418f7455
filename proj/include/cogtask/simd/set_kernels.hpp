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

// Intersection/union cardinalities of two packed bitsets. Every variant must
// return identical counts; the vector paths are only faster.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cogtask::simd {

struct SetCounts {
  std::uint64_t intersection = 0;
  std::uint64_t union_size = 0;
  bool operator==(const SetCounts&) const = default;
};

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

// a and b must have the same length.
SetCounts set_counts_scalar(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Kernels compiled into this build and supported by the running CPU.
std::vector<Isa> available_isas();

/// Best available kernel, selected once on first use.
Isa active_isa();

/// Runs the named kernel. Throws std::invalid_argument when `isa` is not in
/// available_isas() or the spans differ in length.
SetCounts set_counts(Isa isa, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

inline SetCounts set_counts(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return set_counts(active_isa(), a, b);
}

/// Fixed-universe bitset used to pack semantic signatures for the kernels.
class PackedSet {
 public:
  explicit PackedSet(std::size_t universe = 0) : words_((universe + 63) / 64, 0) {}
  void set(std::size_t bit) { words_[bit / 64] |= std::uint64_t{1} << (bit % 64); }
  bool test(std::size_t bit) const { return (words_[bit / 64] >> (bit % 64)) & 1u; }
  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace cogtask::simd
