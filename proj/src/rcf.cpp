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

#include "prorcf/rcf.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "prorcf/lp.hpp"

namespace prorcf {
namespace {

constexpr double kGuard = 1e-9;

void CheckInputs(const Prospect& x, const Decomposition& d,
                 const ValidatedInstance& inst, bool law) {
  if (d.law_invariant() != law) {
    throw ValidationError(law ? "law-invariant evaluation needs a law-invariant decomposition"
                              : "base evaluation needs a base decomposition");
  }
  if (inst.law_invariant() != law) {
    throw ValidationError("instance law flag does not match the evaluation mode");
  }
  d.CheckAgainst(inst);
  if (!x.SameShape(inst.theta(0))) {
    throw ValidationError("prospect dimensions do not match the instance");
  }
}

// Caches one interpolation solve per prefix length.
class LevelPrograms {
 public:
  LevelPrograms(const Prospect& x, const Decomposition& d,
                const ValidatedInstance& inst, bool law)
      : x_(x), d_(d), inst_(inst), law_(law) {}

  const PlpResult& At(std::size_t h) {
    auto it = cache_.find(h);
    if (it != cache_.end()) return it->second;
    ++calls_;
    PlpResult r = law_ ? solve_interpolation_law(inst_, x_, d_, h)
                       : solve_interpolation(inst_, x_, d_, h);
    if (!r.feasible) throw SolverError("interpolation program reported infeasible");
    return cache_.emplace(h, std::move(r)).first->second;
  }

  // True once the program at prefix h clears the next level.
  bool Clears(std::size_t h) {
    if (h == d_.size()) return true;
    return At(h).value > d_.level(h + 1) + kGuard;
  }

  RcfEvaluation Finish(std::size_t h) {
    const PlpResult& r = At(h);
    return {std::min(d_.level(h), r.value), h, calls_, r.subgradient};
  }

 private:
  const Prospect& x_;
  const Decomposition& d_;
  const ValidatedInstance& inst_;
  bool law_;
  std::map<std::size_t, PlpResult> cache_;
  long calls_ = 0;
};

RcfEvaluation BinarySearch(const Prospect& x, const Decomposition& d,
                           const ValidatedInstance& inst, bool law) {
  CheckInputs(x, d, inst, law);
  LevelPrograms programs(x, d, inst, law);
  std::size_t lo = 1;
  std::size_t hi = d.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (programs.Clears(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return programs.Finish(lo);
}

}  // namespace

RcfEvaluation eval_rcf_detailed(const Prospect& x, const Decomposition& d,
                                const ValidatedInstance& inst) {
  return BinarySearch(x, d, inst, false);
}

double eval_rcf(const Prospect& x, const Decomposition& d,
                const ValidatedInstance& inst) {
  return eval_rcf_detailed(x, d, inst).value;
}

RcfEvaluation eval_rcf_law_detailed(const Prospect& x, const Decomposition& d,
                                    const ValidatedInstance& inst) {
  return BinarySearch(x, d, inst, true);
}

double eval_rcf_law(const Prospect& x, const Decomposition& d,
                    const ValidatedInstance& inst) {
  return eval_rcf_law_detailed(x, d, inst).value;
}

RcfEvaluation eval_rcf_levelsearch_detailed(const Prospect& x,
                                            const Decomposition& d,
                                            const ValidatedInstance& inst) {
  const bool law = d.law_invariant();
  CheckInputs(x, d, inst, law);
  LevelPrograms programs(x, d, inst, law);
  std::size_t h = 1;
  while (!programs.Clears(h)) ++h;
  return programs.Finish(h);
}

double eval_rcf_levelsearch(const Prospect& x, const Decomposition& d,
                            const ValidatedInstance& inst) {
  return eval_rcf_levelsearch_detailed(x, d, inst).value;
}

double evaluate(const Prospect& x, const Decomposition& d,
                const ValidatedInstance& inst) {
  return d.law_invariant() ? eval_rcf_law(x, d, inst) : eval_rcf(x, d, inst);
}

double interpolation_dual_value(const Prospect& x, const Decomposition& d,
                                std::size_t h, const ValidatedInstance& inst) {
  LpProblem lp(Sense::kMaximize);
  const int q = lp.AddVariable(0.0, kInfinity, -inst.lipschitz(), "q");
  std::vector<Term> simplex;
  for (std::size_t j = 1; j <= h; ++j) {
    const int p = lp.AddVariable(0.0, kInfinity, d.level(j), "p" + std::to_string(j));
    simplex.push_back({p, 1.0});
  }
  lp.AddConstraint(simplex, Relation::kEqual, 1.0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<Term> row{{q, -1.0}};
    for (std::size_t j = 1; j <= h; ++j) {
      row.push_back({static_cast<int>(j), inst.theta(d.prospect_at(j))[k]});
    }
    lp.AddConstraint(std::move(row), Relation::kLessEqual, x[k]);
  }
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal) throw SolverError("interpolation dual not optimal");
  return r.objective;
}

double interpolation_dual_value_law(const Prospect& x, const Decomposition& d,
                                    std::size_t h,
                                    const ValidatedInstance& inst) {
  const std::size_t T = x.scenarios();
  const std::size_t N = x.attributes();
  LpProblem lp(Sense::kMaximize);
  const int q = lp.AddVariable(0.0, kInfinity, -inst.lipschitz(), "q");
  std::vector<int> p(h + 1), rho(h + 1);
  std::vector<Term> simplex;
  for (std::size_t j = 1; j <= h; ++j) {
    p[j] = lp.AddVariable(0.0, kInfinity, d.level(j));
    simplex.push_back({p[j], 1.0});
  }
  for (std::size_t j = 1; j <= h; ++j) {
    rho[j] = lp.num_variables();
    for (std::size_t e = 0; e < T * T; ++e) lp.AddVariable(0.0, kInfinity);
  }
  lp.AddConstraint(simplex, Relation::kEqual, 1.0);
  auto r_var = [&](std::size_t j, std::size_t t, std::size_t u) {
    return rho[j] + static_cast<int>(t * T + u);
  };
  for (std::size_t j = 1; j <= h; ++j) {
    for (std::size_t t = 0; t < T; ++t) {
      std::vector<Term> rows{{p[j], -1.0}}, cols{{p[j], -1.0}};
      for (std::size_t u = 0; u < T; ++u) {
        rows.push_back({r_var(j, t, u), 1.0});
        cols.push_back({r_var(j, u, t), 1.0});
      }
      lp.AddConstraint(std::move(rows), Relation::kEqual, 0.0);
      lp.AddConstraint(std::move(cols), Relation::kEqual, 0.0);
    }
  }
  for (std::size_t u = 0; u < T; ++u) {
    for (std::size_t n = 0; n < N; ++n) {
      std::vector<Term> row{{q, -1.0}};
      for (std::size_t j = 1; j <= h; ++j) {
        const Prospect& theta = inst.theta(d.prospect_at(j));
        for (std::size_t t = 0; t < T; ++t) {
          if (theta(t, n) != 0.0) row.push_back({r_var(j, t, u), theta(t, n)});
        }
      }
      lp.AddConstraint(std::move(row), Relation::kLessEqual, x(u, n));
    }
  }
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal) throw SolverError("law-invariant interpolation dual not optimal");
  return r.objective;
}

}  // namespace prorcf
