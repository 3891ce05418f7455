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


#include <algorithm>
#include <bit>
#include <stdexcept>
#include <random>

#include "cogtask/simd/set_kernels.hpp"
#include "doctest.h"

using namespace cogtask::simd;

namespace {

SetCounts naive(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  SetCounts c;
  for (std::size_t w = 0; w < a.size(); ++w)
    for (int bit = 0; bit < 64; ++bit) {
      bool x = (a[w] >> bit) & 1u, y = (b[w] >> bit) & 1u;
      c.intersection += x && y;
      c.union_size += x || y;
    }
  return c;
}

}  // namespace

TEST_CASE("scalar kernel matches bit-by-bit counting") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u}) {
    std::vector<std::uint64_t> a(n), b(n);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng() & rng();
    CHECK(set_counts_scalar(a, b) == naive(a, b));
  }
}

TEST_CASE("every available kernel agrees with the scalar kernel") {
  auto isas = available_isas();
  REQUIRE(!isas.empty());
  CHECK(isas.front() == Isa::scalar);
  CHECK(std::find(isas.begin(), isas.end(), active_isa()) != isas.end());
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<std::size_t> len(0, 70);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = len(rng);
    std::vector<std::uint64_t> a(n), b(n);
    int density = trial % 4;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng();
      b[i] = rng();
      for (int d = 0; d < density; ++d) {
        a[i] &= rng();
        b[i] &= rng();
      }
    }
    if (trial % 97 == 0) std::fill(a.begin(), a.end(), ~std::uint64_t{0});
    auto ref = set_counts_scalar(a, b);
    for (Isa isa : isas) {
      INFO(to_string(isa) << " n=" << n);
      CHECK(set_counts(isa, a, b) == ref);
    }
  }
}

TEST_CASE("kernel dispatch rejects bad input") {
  std::vector<std::uint64_t> a(3), b(4);
  CHECK_THROWS_AS(set_counts(Isa::scalar, a, b), std::invalid_argument);
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    auto isas = available_isas();
    if (std::find(isas.begin(), isas.end(), isa) == isas.end())
      CHECK_THROWS_AS(set_counts(isa, a, a), std::invalid_argument);
  }
}

TEST_CASE("packed sets") {
  PackedSet s(130);
  CHECK(s.words().size() == 3);
  s.set(0);
  s.set(64);
  s.set(129);
  CHECK(s.test(0));
  CHECK(s.test(129));
  CHECK_FALSE(s.test(1));
  PackedSet t(130);
  t.set(64);
  auto c = set_counts(s.words(), t.words());
  CHECK(c.intersection == 1);
  CHECK(c.union_size == 3);
}
