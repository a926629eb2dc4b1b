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

#ifndef PRORCF_ORACLE_HPP_
#define PRORCF_ORACLE_HPP_

#include <vector>

#include "prorcf/core.hpp"

namespace prorcf {

struct OracleResult {
  std::vector<double> values;  // indexed by member id
  long lp_calls = 0;
};

// Exact solver for the value problem by enumeration of weak orderings of the
// prospect set. Each ordering resolves every disjunction and leaves one LP;
// a depth-first search over ordering prefixes prunes with a relaxation that
// keeps only the constraints already implied by the prefix. Limited to at
// most eight distinct prospects.
OracleResult oracle_value_problem(const ValidatedInstance& inst);

// Same search, with every constraint replicated over all scenario
// permutations of the earlier prospect. Limited to eight prospects and five
// scenarios.
OracleResult oracle_value_problem_law(const ValidatedInstance& inst);

}  // namespace prorcf

#endif  // PRORCF_ORACLE_HPP_
