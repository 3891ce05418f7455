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

#include <stdexcept>

#include "kernels_internal.hpp"

namespace cogtask::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(COGTASK_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::neon:
#if defined(COGTASK_HAVE_NEON_KERNEL)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

Isa pick_best() {
  if (cpu_has(Isa::avx2)) return Isa::avx2;
  if (cpu_has(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

}  // namespace

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
    if (cpu_has(isa)) out.push_back(isa);
  return out;
}

Isa active_isa() {
  static const Isa best = pick_best();
  return best;
}

SetCounts set_counts(Isa isa, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("bitset length mismatch");
  if (!cpu_has(isa))
    throw std::invalid_argument("kernel '" + std::string(to_string(isa)) + "' not available");
  switch (isa) {
#if defined(COGTASK_HAVE_AVX2_KERNEL)
    case Isa::avx2: return detail::set_counts_avx2(a, b);
#endif
#if defined(COGTASK_HAVE_NEON_KERNEL)
    case Isa::neon: return detail::set_counts_neon(a, b);
#endif
    default: return set_counts_scalar(a, b);
  }
}

}  // namespace cogtask::simd
