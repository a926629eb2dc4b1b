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

#ifndef PRORCF_RCF_HPP_
#define PRORCF_RCF_HPP_

#include <cstddef>
#include <vector>

#include "prorcf/core.hpp"
#include "prorcf/value.hpp"

namespace prorcf {

struct RcfEvaluation {
  double value = 0.0;
  std::size_t level = 0;  // sorted prefix length whose program fixed the value
  long lp_calls = 0;
  std::vector<double> subgradient;
};

// Robust choice function at x by binary search over the sorted levels.
RcfEvaluation eval_rcf_detailed(const Prospect& x, const Decomposition& d,
                                const ValidatedInstance& inst);
double eval_rcf(const Prospect& x, const Decomposition& d,
                const ValidatedInstance& inst);

RcfEvaluation eval_rcf_law_detailed(const Prospect& x, const Decomposition& d,
                                    const ValidatedInstance& inst);
double eval_rcf_law(const Prospect& x, const Decomposition& d,
                    const ValidatedInstance& inst);

// Linear scan over the levels; works for both base and law-invariant
// decompositions.
RcfEvaluation eval_rcf_levelsearch_detailed(const Prospect& x,
                                            const Decomposition& d,
                                            const ValidatedInstance& inst);
double eval_rcf_levelsearch(const Prospect& x, const Decomposition& d,
                            const ValidatedInstance& inst);

// Dispatches on the decomposition's law flag.
double evaluate(const Prospect& x, const Decomposition& d,
                const ValidatedInstance& inst);

// Optimal value of the explicit dual of the interpolation program at prefix
// h, solved as a primal:
//   max sum_k v_k p_k - C q  s.t.  sum_k p_k theta_k - x <= q 1,
//   sum p = 1, p >= 0, q >= 0.
double interpolation_dual_value(const Prospect& x, const Decomposition& d,
                                std::size_t h, const ValidatedInstance& inst);

// Law-invariant dual with one coupling matrix rho_k per member whose row and
// column sums equal p_k.
double interpolation_dual_value_law(const Prospect& x, const Decomposition& d,
                                    std::size_t h,
                                    const ValidatedInstance& inst);

}  // namespace prorcf

#endif  // PRORCF_RCF_HPP_
