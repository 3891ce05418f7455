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

#include "cogtask/simd/set_kernels.hpp"

namespace cogtask::simd::detail {

#if defined(COGTASK_HAVE_AVX2_KERNEL)
SetCounts set_counts_avx2(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
#endif
#if defined(COGTASK_HAVE_NEON_KERNEL)
SetCounts set_counts_neon(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
#endif

}  // namespace cogtask::simd::detail
