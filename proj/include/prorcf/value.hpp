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

#ifndef PRORCF_VALUE_HPP_
#define PRORCF_VALUE_HPP_

#include <cstddef>
#include <vector>

#include "prorcf/core.hpp"
#include "prorcf/lp.hpp"

namespace prorcf {

struct DecompositionEntry {
  std::size_t prospect;  // id into ValidatedInstance::theta()
  double value;
  friend bool operator==(const DecompositionEntry&,
                         const DecompositionEntry&) = default;
};

// Members of the prospect set ordered by non-increasing robust value.
// Level indices are 1-based: level(1) is the normalizing prospect's value 0
// and level(size()) is the smallest value. Index size() + 1 denotes the
// sentinel below every level; it has no finite value and is reported through
// is_sentinel() rather than a floating-point infinity.
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(bool law_invariant, std::vector<DecompositionEntry> entries,
                long lp_calls);

  bool law_invariant() const { return law_invariant_; }
  long lp_calls() const { return lp_calls_; }
  const std::vector<DecompositionEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool is_sentinel(std::size_t j) const { return j == entries_.size() + 1; }
  double level(std::size_t j) const { return entries_.at(j - 1).value; }
  std::size_t prospect_at(std::size_t j) const { return entries_.at(j - 1).prospect; }

  // Value of a member by id.
  double value_of(std::size_t id) const;
  // Values indexed by member id.
  std::vector<double> values_by_id() const;

  // Throws ValidationError unless this decomposition is a well-formed output
  // of the sort on inst (same size, a permutation of ids, normalizing
  // prospect first at 0, non-increasing values, matching law flag).
  void CheckAgainst(const ValidatedInstance& inst) const;

  void Append(std::size_t id, double value) { entries_.push_back({id, value}); }
  void AddLpCalls(long n) { lp_calls_ += n; }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  bool law_invariant_ = false;
  std::vector<DecompositionEntry> entries_;
  long lp_calls_ = 0;
};

struct KinkedMajorant {
  Prospect anchor;
  double value;
  std::vector<double> subgradient;
};

// Outcome of one interpolation program anchored at a prospect.
struct PlpResult {
  bool feasible = false;
  double value = 0.0;
  std::vector<double> subgradient;  // length T*N, scenario-major
  // Assignment potentials per prefix member (law-invariant program only),
  // y[k] and w[k] each of length T.
  std::vector<std::vector<double>> row_duals;
  std::vector<std::vector<double>> col_duals;
};

// min v  s.t.  v + <s, theta' - x> >= v*(theta')  for the first `prefix`
// members of d,  s >= 0,  sum(s) <= C,  and v = p for every p in pins.
PlpResult solve_interpolation(const ValidatedInstance& inst, const Prospect& x,
                              const Decomposition& d, std::size_t prefix,
                              const std::vector<double>& pins = {});

// Law-invariant counterpart: each member theta' contributes the reduced
// constraints  v + 1'y + 1'w - <s, x> >= v*(theta')  and
// sum_n theta'(t, n) s(u, n) - y_t - w_u >= 0  for every scenario pair (t, u).
PlpResult solve_interpolation_law(const ValidatedInstance& inst,
                                  const Prospect& x, const Decomposition& d,
                                  std::size_t prefix,
                                  const std::vector<double>& pins = {});

// The candidate program for member theta against the first j sorted members,
// pinned by every comparison in which theta is preferred to a sorted member.
PlpResult solve_plp(const ValidatedInstance& inst, std::size_t theta,
                    const Decomposition& d, std::size_t j);
PlpResult solve_plp_law(const ValidatedInstance& inst, std::size_t theta,
                        const Decomposition& d, std::size_t j);

// min(last sorted value, candidate program value); an infeasible candidate
// program yields the last sorted value.
double predictor(const ValidatedInstance& inst, std::size_t theta,
                 const Decomposition& d, std::size_t j);
double predictor_law(const ValidatedInstance& inst, std::size_t theta,
                     const Decomposition& d, std::size_t j);

Decomposition sort_value_problem(const ValidatedInstance& inst);
Decomposition sort_value_problem_law(const ValidatedInstance& inst);

// Dispatches on inst.law_invariant().
Decomposition solve_value_problem(const ValidatedInstance& inst);

// Kinked majorant of member theta read off its final sorted program.
KinkedMajorant kinked_majorant(const ValidatedInstance& inst,
                               const Decomposition& d, std::size_t theta);

}  // namespace prorcf

#endif  // PRORCF_VALUE_HPP_
