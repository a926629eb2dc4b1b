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

#ifndef PRORCF_ACCEPT_HPP_
#define PRORCF_ACCEPT_HPP_

#include <cstddef>
#include <vector>

#include "prorcf/core.hpp"
#include "prorcf/value.hpp"

namespace prorcf {

// Level selection: the largest j with v <= level(j) (up to a 1e-9 guard),
// so that level(j + 1) < v <= level(j). Throws for v > 0.
std::size_t kappa(double v, const Decomposition& d);

struct AcceptancePolyhedron {
  double level;
  std::size_t kappa;
  std::vector<Prospect> generators;  // translated prospects over the prefix
  double offset;                     // level / C, added to every entry
};

AcceptancePolyhedron acceptance_polyhedron(double v, const Decomposition& d,
                                           const ValidatedInstance& inst);

// x belongs to the level-v acceptance set: one feasibility LP over the
// mixture weights p.
bool membership(const Prospect& x, double v, const Decomposition& d,
                const ValidatedInstance& inst);

// Law-invariant acceptance set: feasibility over (p, q, rho) with
// row and column sums of each rho_k equal to p_k.
bool membership_law(const Prospect& x, double v, const Decomposition& d,
                    const ValidatedInstance& inst);

// c_j = -min{ m : m 1 >= sum_k tilde_k p_k, sum p = 1, p >= 0 } over the
// first j sorted members.
double compute_c(std::size_t j, const Decomposition& d,
                 const ValidatedInstance& inst);

// mu_j(x) = min{ m : x + m 1 >= sum_k tilde_k p_k + c_j 1, sum p = 1, p >= 0 }.
double mu(std::size_t j, const Prospect& x, const Decomposition& d,
          const ValidatedInstance& inst);

// Precomputed constants c_1..c_J for repeated target/risk queries.
class AspirationalDecomposition {
 public:
  AspirationalDecomposition(const Decomposition& d, const ValidatedInstance& inst);

  double c(std::size_t j) const { return c_.at(j - 1); }
  const std::vector<double>& constants() const { return c_; }
  double mu(std::size_t j, const Prospect& x) const;
  double tau(double v) const;
  // mu_{kappa(v)}(x - tau(v) 1)
  double risk_at(double v, const Prospect& x) const;

 private:
  const Decomposition& d_;
  const ValidatedInstance& inst_;
  std::vector<double> c_;
};

// Largest grid level v with mu_{kappa(v)}(x - tau(v) 1) <= 1e-9. The grid
// need not be sorted. Throws on an empty grid or when no level qualifies.
double eval_rcf_via_aspiration(const Prospect& x, const Decomposition& d,
                               const ValidatedInstance& inst,
                               const std::vector<double>& grid);

// Levels 0, -step, -2 step, ... down to and including the first level at or
// below `lowest`.
std::vector<double> level_grid(double lowest, double step);

}  // namespace prorcf

#endif  // PRORCF_ACCEPT_HPP_
