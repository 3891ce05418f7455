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

#include <bit>

#include "cogtask/simd/set_kernels.hpp"

namespace cogtask::simd {

SetCounts set_counts_scalar(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  SetCounts c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c.intersection += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    c.union_size += static_cast<std::uint64_t>(std::popcount(a[i] | b[i]));
  }
  return c;
}

}  // namespace cogtask::simd
