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

#include <arm_neon.h>

#include <bit>

#include "kernels_internal.hpp"

namespace cogtask::simd::detail {

SetCounts set_counts_neon(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  uint64x2_t inter_acc = vdupq_n_u64(0);
  uint64x2_t union_acc = vdupq_n_u64(0);
  for (; i + 2 <= n; i += 2) {
    uint8x16_t va = vreinterpretq_u8_u64(vld1q_u64(a.data() + i));
    uint8x16_t vb = vreinterpretq_u8_u64(vld1q_u64(b.data() + i));
    uint8x16_t inter = vcntq_u8(vandq_u8(va, vb));
    uint8x16_t uni = vcntq_u8(vorrq_u8(va, vb));
    inter_acc = vaddq_u64(inter_acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(inter))));
    union_acc = vaddq_u64(union_acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(uni))));
  }
  SetCounts c{vgetq_lane_u64(inter_acc, 0) + vgetq_lane_u64(inter_acc, 1),
              vgetq_lane_u64(union_acc, 0) + vgetq_lane_u64(union_acc, 1)};
  for (; i < n; ++i) {
    c.intersection += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    c.union_size += static_cast<std::uint64_t>(std::popcount(a[i] | b[i]));
  }
  return c;
}

}  // namespace cogtask::simd::detail
