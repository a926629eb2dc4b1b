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

#include "prorcf/accept.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prorcf/lp.hpp"

namespace prorcf {
namespace {

constexpr double kGuard = 1e-9;

void CheckShape(const Prospect& x, const ValidatedInstance& inst) {
  if (!x.SameShape(inst.theta(0))) {
    throw ValidationError("prospect dimensions do not match the instance");
  }
}

void CheckLevelIndex(std::size_t j, const Decomposition& d) {
  if (j < 1 || j > d.size()) {
    throw ValidationError("level index " + std::to_string(j) + " outside 1.." +
                          std::to_string(d.size()));
  }
}

std::vector<Prospect> Generators(std::size_t j, const Decomposition& d,
                                 const ValidatedInstance& inst) {
  std::vector<Prospect> out;
  for (std::size_t k = 1; k <= j; ++k) {
    out.push_back(tilde(inst.theta(d.prospect_at(k)), d.level(k), inst.lipschitz()));
  }
  return out;
}

// min m  s.t.  m - sum_k g_k[i] p_k >= rhs[i] for every entry i, p in simplex.
double MixtureShift(const std::vector<Prospect>& gens, const std::vector<double>& rhs) {
  LpProblem lp(Sense::kMinimize);
  const int m = lp.AddVariable(-kInfinity, kInfinity, 1.0, "m");
  std::vector<Term> simplex;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    simplex.push_back({lp.AddVariable(0.0, kInfinity), 1.0});
  }
  lp.AddConstraint(std::move(simplex), Relation::kEqual, 1.0);
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    std::vector<Term> row{{m, 1.0}};
    for (std::size_t k = 0; k < gens.size(); ++k) {
      row.push_back({static_cast<int>(k + 1), -gens[k][i]});
    }
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, rhs[i]);
  }
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal) throw SolverError("mixture shift program not optimal");
  return r.objective;
}

}  // namespace

std::size_t kappa(double v, const Decomposition& d) {
  if (v > 0.0) throw ValidationError("acceptance level must be <= 0");
  if (d.size() == 0) throw ValidationError("empty decomposition");
  std::size_t j = 1;
  while (j < d.size() && d.level(j + 1) >= v - kGuard) ++j;
  return j;
}

AcceptancePolyhedron acceptance_polyhedron(double v, const Decomposition& d,
                                           const ValidatedInstance& inst) {
  const std::size_t j = kappa(v, d);
  return {v, j, Generators(j, d, inst), v / inst.lipschitz()};
}

bool membership(const Prospect& x, double v, const Decomposition& d,
                const ValidatedInstance& inst) {
  CheckShape(x, inst);
  const AcceptancePolyhedron poly = acceptance_polyhedron(v, d, inst);
  LpProblem lp(Sense::kMinimize);
  std::vector<Term> simplex;
  for (std::size_t k = 0; k < poly.generators.size(); ++k) {
    simplex.push_back({lp.AddVariable(0.0, kInfinity), 1.0});
  }
  lp.AddConstraint(std::move(simplex), Relation::kEqual, 1.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<Term> row;
    for (std::size_t k = 0; k < poly.generators.size(); ++k) {
      row.push_back({static_cast<int>(k), poly.generators[k][i]});
    }
    lp.AddConstraint(std::move(row), Relation::kLessEqual, x[i] - poly.offset);
  }
  return solve_lp(lp).status == LpStatus::kOptimal;
}

bool membership_law(const Prospect& x, double v, const Decomposition& d,
                    const ValidatedInstance& inst) {
  CheckShape(x, inst);
  const std::size_t j = kappa(v, d);
  const std::size_t T = x.scenarios();
  const std::size_t N = x.attributes();
  LpProblem lp(Sense::kMinimize);
  const int q = lp.AddVariable(0.0, kInfinity, 0.0, "q");
  std::vector<int> p(j + 1), rho(j + 1);
  std::vector<Term> simplex;
  std::vector<Term> level{{q, -inst.lipschitz()}};
  for (std::size_t k = 1; k <= j; ++k) {
    p[k] = lp.AddVariable(0.0, kInfinity);
    simplex.push_back({p[k], 1.0});
    level.push_back({p[k], d.level(k)});
  }
  for (std::size_t k = 1; k <= j; ++k) {
    rho[k] = lp.num_variables();
    for (std::size_t e = 0; e < T * T; ++e) lp.AddVariable(0.0, kInfinity);
  }
  lp.AddConstraint(std::move(simplex), Relation::kEqual, 1.0);
  lp.AddConstraint(std::move(level), Relation::kGreaterEqual, v);
  auto r_var = [&](std::size_t k, std::size_t t, std::size_t u) {
    return rho[k] + static_cast<int>(t * T + u);
  };
  for (std::size_t k = 1; k <= j; ++k) {
    for (std::size_t t = 0; t < T; ++t) {
      std::vector<Term> rows{{p[k], -1.0}}, cols{{p[k], -1.0}};
      for (std::size_t u = 0; u < T; ++u) {
        rows.push_back({r_var(k, t, u), 1.0});
        cols.push_back({r_var(k, u, t), 1.0});
      }
      lp.AddConstraint(std::move(rows), Relation::kEqual, 0.0);
      lp.AddConstraint(std::move(cols), Relation::kEqual, 0.0);
    }
  }
  for (std::size_t u = 0; u < T; ++u) {
    for (std::size_t n = 0; n < N; ++n) {
      std::vector<Term> row{{q, -1.0}};
      for (std::size_t k = 1; k <= j; ++k) {
        const Prospect& theta = inst.theta(d.prospect_at(k));
        for (std::size_t t = 0; t < T; ++t) {
          if (theta(t, n) != 0.0) row.push_back({r_var(k, t, u), theta(t, n)});
        }
      }
      lp.AddConstraint(std::move(row), Relation::kLessEqual, x(u, n));
    }
  }
  return solve_lp(lp).status == LpStatus::kOptimal;
}

double compute_c(std::size_t j, const Decomposition& d,
                 const ValidatedInstance& inst) {
  CheckLevelIndex(j, d);
  const std::vector<Prospect> gens = Generators(j, d, inst);
  return -MixtureShift(gens, std::vector<double>(inst.theta(0).size(), 0.0));
}

double mu(std::size_t j, const Prospect& x, const Decomposition& d,
          const ValidatedInstance& inst) {
  CheckLevelIndex(j, d);
  CheckShape(x, inst);
  return AspirationalDecomposition(d, inst).mu(j, x);
}

AspirationalDecomposition::AspirationalDecomposition(const Decomposition& d,
                                                     const ValidatedInstance& inst)
    : d_(d), inst_(inst) {
  for (std::size_t j = 1; j <= d.size(); ++j) c_.push_back(compute_c(j, d, inst));
}

double AspirationalDecomposition::mu(std::size_t j, const Prospect& x) const {
  CheckLevelIndex(j, d_);
  CheckShape(x, inst_);
  std::vector<double> rhs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = c(j) - x[i];
  return MixtureShift(Generators(j, d_, inst_), rhs);
}

double AspirationalDecomposition::tau(double v) const {
  return v / inst_.lipschitz() - c(kappa(v, d_));
}

double AspirationalDecomposition::risk_at(double v, const Prospect& x) const {
  return mu(kappa(v, d_), shift(x, -tau(v)));
}

double eval_rcf_via_aspiration(const Prospect& x, const Decomposition& d,
                               const ValidatedInstance& inst,
                               const std::vector<double>& grid) {
  if (grid.empty()) throw ValidationError("empty level grid");
  std::vector<double> levels = grid;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (double v : levels) {
    if (v > 0.0) throw ValidationError("grid levels must be <= 0");
  }
  const AspirationalDecomposition asp(d, inst);
  auto accepted = [&](double v) { return asp.risk_at(v, x) <= kGuard; };
  // Binary search for the last accepted entry.
  if (!accepted(levels.front())) {
    throw ValidationError("level grid does not reach down to the prospect's value");
  }
  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (accepted(levels[mid])) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return levels[lo];
}

std::vector<double> level_grid(double lowest, double step) {
  if (!(step > 0.0)) throw ValidationError("grid step must be positive");
  if (lowest > 0.0) lowest = 0.0;
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double v = i == 0 ? 0.0 : -static_cast<double>(i) * step;
    grid.push_back(v);
    if (v <= lowest) break;
  }
  return grid;
}

}  // namespace prorcf
