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

#include <cstdlib>
#include <cstring>

#include "prorcf/simd.hpp"

namespace prorcf::simd {

#if defined(PRORCF_HAVE_AVX2)
const Kernels* avx2_kernels_unchecked();
#endif
#if defined(PRORCF_HAVE_NEON)
const Kernels* neon_kernels_unchecked();
#endif

const Kernels* avx2_kernels() {
#if defined(PRORCF_HAVE_AVX2)
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? avx2_kernels_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels* neon_kernels() {
#if defined(PRORCF_HAVE_NEON)
  return neon_kernels_unchecked();
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels* chosen = [] {
    const char* force = std::getenv("PRORCF_SIMD");
    if (force != nullptr && std::strcmp(force, "scalar") == 0) {
      return &scalar_kernels();
    }
    if (const Kernels* k = avx2_kernels()) return k;
    if (const Kernels* k = neon_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace prorcf::simd
