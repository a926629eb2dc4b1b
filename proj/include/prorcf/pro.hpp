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

#ifndef PRORCF_PRO_HPP_
#define PRORCF_PRO_HPP_

#include <cstddef>
#include <vector>

#include "prorcf/core.hpp"
#include "prorcf/lp.hpp"
#include "prorcf/value.hpp"

namespace prorcf {

// Polyhedral decision set with an affine reward map. Entry (t, n) of the
// reward is  g[t * N + n] . z + h[t * N + n].
struct DecisionModel {
  std::size_t num_vars = 0;
  std::vector<std::vector<double>> A;  // A z <= b
  std::vector<double> b;
  std::vector<std::vector<double>> Aeq;  // Aeq z = beq
  std::vector<double> beq;
  std::vector<double> lower;  // per-variable bounds, +-kInfinity allowed
  std::vector<double> upper;
  std::size_t scenarios = 0;
  std::size_t attributes = 0;
  std::vector<std::vector<double>> g;
  std::vector<double> h;

  Prospect Reward(const std::vector<double>& z) const;
  bool Contains(const std::vector<double>& z, double tol = 1e-9) const;
};

// Checks dimensions, then solves LPs to confirm the decision set is
// nonempty and bounded. Throws ValidationError otherwise.
void validate_model(const DecisionModel& m);

struct LevelSolution {
  bool feasible = false;
  std::vector<double> z;
  double value = 0.0;
};

struct RobustSolution {
  std::vector<double> z_star;
  double value = 0.0;
  std::size_t level_index = 0;
  long lp_calls = 0;
};

// Is some decision acceptable at a level in [level(j+1), level(j)]? The
// lower end is open for j = J. One LP; the witness decision is returned.
LevelSolution feasibility(std::size_t j, const DecisionModel& m,
                          const Decomposition& d, const ValidatedInstance& inst);
// Maximizes the level over the same system. Throws InfeasibleError if the
// system is empty.
LevelSolution optimize_at_level(std::size_t j, const DecisionModel& m,
                                const Decomposition& d,
                                const ValidatedInstance& inst);
RobustSolution solve_pro(const DecisionModel& m, const Decomposition& d,
                         const ValidatedInstance& inst);
// Linear scan over levels.
RobustSolution solve_pro_levelsearch(const DecisionModel& m,
                                     const Decomposition& d,
                                     const ValidatedInstance& inst);

LevelSolution feasibility_law(std::size_t j, const DecisionModel& m,
                              const Decomposition& d,
                              const ValidatedInstance& inst);
LevelSolution optimize_at_level_law(std::size_t j, const DecisionModel& m,
                                    const Decomposition& d,
                                    const ValidatedInstance& inst);
RobustSolution solve_pro_law(const DecisionModel& m, const Decomposition& d,
                             const ValidatedInstance& inst);
RobustSolution solve_pro_law_levelsearch(const DecisionModel& m,
                                         const Decomposition& d,
                                         const ValidatedInstance& inst);

struct BenchmarkSolution {
  std::vector<double> z;
  double objective = 0.0;
  Decomposition decomposition;  // of the instance re-normalized at the benchmark
};

// Maximizes f . z over decisions whose reward is at least as preferred as
// the benchmark under every admissible choice function. The instance is
// rebuilt with the benchmark as normalizing prospect, validated and sorted.
// Throws InfeasibleError when no decision qualifies.
BenchmarkSolution solve_benchmark_pro(const DecisionModel& m,
                                      const std::vector<double>& f,
                                      const Prospect& benchmark,
                                      const Instance& inst);

}  // namespace prorcf

#endif  // PRORCF_PRO_HPP_
