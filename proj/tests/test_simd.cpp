// Copyright 2026 The prorcf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "prorcf/simd.hpp"

using namespace prorcf;

namespace {

std::vector<const simd::Kernels*> Variants() {
  std::vector<const simd::Kernels*> out{&simd::scalar_kernels()};
  if (simd::avx2_kernels()) out.push_back(simd::avx2_kernels());
  if (simd::neon_kernels()) out.push_back(simd::neon_kernels());
  return out;
}

std::vector<double> Random(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> v(n);
  for (double& e : v) e = u(rng);
  return v;
}

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("active table is one of the compiled variants") {
    const simd::Kernels& a = simd::active();
    bool found = false;
    for (const auto* k : Variants()) found = found || k == &a;
    CHECK(found);
    MESSAGE("active kernels: " << std::string(a.name));
  }

  TEST_CASE("vector kernels agree with the scalar reference") {
    const simd::Kernels& ref = simd::scalar_kernels();
    std::mt19937_64 rng(11);
    for (const auto* k : Variants()) {
      CAPTURE(k->name);
      for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 1023}) {
        CAPTURE(n);
        const std::vector<double> x = Random(rng, n);
        const std::vector<double> y = Random(rng, n);
        std::vector<double> y1 = y;
        std::vector<double> y2 = y;
        ref.axpy(-1.75, x.data(), y1.data(), n);
        k->axpy(-1.75, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-14));
        const double d1 = ref.dot(x.data(), y.data(), n);
        const double d2 = k->dot(x.data(), y.data(), n);
        CHECK(std::fabs(d1 - d2) <= 1e-12 * (1.0 + static_cast<double>(n) * 100.0));
        CHECK(ref.max_abs_diff(x.data(), y.data(), n) == k->max_abs_diff(x.data(), y.data(), n));
      }
    }
  }

  TEST_CASE("unaligned views agree") {
    const simd::Kernels& ref = simd::scalar_kernels();
    std::mt19937_64 rng(5);
    const std::vector<double> x = Random(rng, 67);
    const std::vector<double> y = Random(rng, 67);
    for (const auto* k : Variants()) {
      for (std::size_t off = 1; off < 4; ++off) {
        const std::size_t n = 67 - off;
        CHECK(k->max_abs_diff(x.data() + off, y.data() + off, n) ==
              ref.max_abs_diff(x.data() + off, y.data() + off, n));
        CHECK(k->dot(x.data() + off, y.data() + off, n) ==
              doctest::Approx(ref.dot(x.data() + off, y.data() + off, n)).epsilon(1e-12));
      }
    }
  }
}
