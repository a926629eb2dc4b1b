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

#ifndef PRORCF_SIMD_HPP_
#define PRORCF_SIMD_HPP_

#include <cstddef>

namespace prorcf::simd {

// Dense vector kernels used by the simplex pivot and the prospect algebra.
// Each instruction-set variant fills one table; the active table is chosen
// once at startup from the CPU feature flags.
struct Kernels {
  const char* name;
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // sum x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // max |x[i] - y[i]|, 0 for n == 0
  double (*max_abs_diff)(const double* x, const double* y, std::size_t n);
};

const Kernels& scalar_kernels();

// Null when the variant was not compiled in or the CPU lacks the feature.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// The table used by the library. Setting PRORCF_SIMD=scalar in the
// environment forces the reference kernels.
const Kernels& active();

}  // namespace prorcf::simd

#endif  // PRORCF_SIMD_HPP_
