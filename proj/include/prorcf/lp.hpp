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

#ifndef PRORCF_LP_HPP_
#define PRORCF_LP_HPP_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace prorcf {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus status);

struct Term {
  int var;
  double coef;
};

struct LpConstraint {
  std::vector<Term> terms;
  Relation relation;
  double rhs;
  std::string name;
};

// A linear program with bounded variables. Constraints are stored as sparse
// coefficient lists over a shared variable index space.
class LpProblem {
 public:
  explicit LpProblem(Sense sense = Sense::kMinimize) : sense_(sense) {}

  int AddVariable(double lower, double upper, double cost = 0.0,
                  std::string name = {});
  void SetCost(int var, double cost);
  void SetBounds(int var, double lower, double upper);
  void AddConstraint(std::vector<Term> terms, Relation relation, double rhs,
                     std::string name = {});
  // Dense form; the vector length must equal num_variables().
  void AddDenseConstraint(const std::vector<double>& coefs, Relation relation,
                          double rhs, std::string name = {});

  Sense sense() const { return sense_; }
  int num_variables() const { return static_cast<int>(cost_.size()); }
  int num_constraints() const { return static_cast<int>(rows_.size()); }
  double cost(int var) const { return cost_[var]; }
  double lower(int var) const { return lower_[var]; }
  double upper(int var) const { return upper_[var]; }
  const std::string& name(int var) const { return names_[var]; }
  const std::vector<LpConstraint>& constraints() const { return rows_; }

  // Throws ValidationError on out-of-range indices, inverted bounds or
  // non-finite data.
  void Check() const;

 private:
  Sense sense_;
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
  std::vector<LpConstraint> rows_;
};

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  long iterations = 0;
};

struct SimplexOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-7;
  long max_iterations = 0;  // 0 selects a size-based default
};

// Bounded-variable primal simplex on a dense tableau. Deterministic: the
// same problem always yields the same result. Throws SolverError when the
// iteration limit is hit or the final point fails the residual check.
LpResult solve_lp(const LpProblem& problem, const SimplexOptions& options = {});

// Writes the problem in CPLEX LP text format.
std::string ToLpFormat(const LpProblem& problem);

// Process-wide hook: when set, every solve appends its problem to this file.
// Used by the command-line --lp-dump flag.
void SetLpDumpPath(const std::string& path);

}  // namespace prorcf

#endif  // PRORCF_LP_HPP_
