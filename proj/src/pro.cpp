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

#include "prorcf/pro.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prorcf/accept.hpp"

namespace prorcf {

Prospect DecisionModel::Reward(const std::vector<double>& z) const {
  std::vector<double> out(h);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < num_vars; ++k) out[i] += g[i][k] * z[k];
  }
  return Prospect(scenarios, attributes, std::move(out));
}

bool DecisionModel::Contains(const std::vector<double>& z, double tol) const {
  if (z.size() != num_vars) return false;
  for (std::size_t k = 0; k < num_vars; ++k) {
    if (z[k] < lower[k] - tol || z[k] > upper[k] + tol) return false;
  }
  for (std::size_t r = 0; r < A.size(); ++r) {
    double lhs = 0.0;
    for (std::size_t k = 0; k < num_vars; ++k) lhs += A[r][k] * z[k];
    if (lhs > b[r] + tol) return false;
  }
  for (std::size_t r = 0; r < Aeq.size(); ++r) {
    double lhs = 0.0;
    for (std::size_t k = 0; k < num_vars; ++k) lhs += Aeq[r][k] * z[k];
    if (std::fabs(lhs - beq[r]) > tol) return false;
  }
  return true;
}

namespace {

std::vector<int> AddDecisionSet(const DecisionModel& m, LpProblem* lp) {
  std::vector<int> z;
  for (std::size_t k = 0; k < m.num_vars; ++k) {
    z.push_back(lp->AddVariable(m.lower[k], m.upper[k], 0.0, "z" + std::to_string(k)));
  }
  auto row_terms = [&](const std::vector<double>& coefs) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coefs.size(); ++k) {
      if (coefs[k] != 0.0) terms.push_back({z[k], coefs[k]});
    }
    return terms;
  };
  for (std::size_t r = 0; r < m.A.size(); ++r) {
    lp->AddConstraint(row_terms(m.A[r]), Relation::kLessEqual, m.b[r]);
  }
  for (std::size_t r = 0; r < m.Aeq.size(); ++r) {
    lp->AddConstraint(row_terms(m.Aeq[r]), Relation::kEqual, m.beq[r]);
  }
  return z;
}

void CheckCompatible(const DecisionModel& m, const Decomposition& d,
                     const ValidatedInstance& inst, bool law) {
  if (m.scenarios != inst.scenarios() || m.attributes != inst.attributes()) {
    throw ValidationError("model reward dimensions do not match the instance");
  }
  if (d.law_invariant() != law || inst.law_invariant() != law) {
    throw ValidationError("decomposition, instance and optimization mode disagree on law invariance");
  }
  d.CheckAgainst(inst);
}

struct LevelSystem {
  LpProblem lp;
  std::vector<int> z;
  int v = -1;
};

// Decision z, level v in [v_lo, v_hi] and mixture weights p over the first j
// sorted members with reward(z) >= sum_k tilde_k p_k + (v / C) 1.
LevelSystem BaseSystem(std::size_t j, const DecisionModel& m,
                       const Decomposition& d, const ValidatedInstance& inst,
                       double v_lo, double v_hi, Sense sense) {
  LevelSystem s{LpProblem(sense), {}, -1};
  s.z = AddDecisionSet(m, &s.lp);
  s.v = s.lp.AddVariable(v_lo, v_hi, 0.0, "v");
  const int p0 = s.lp.num_variables();
  std::vector<Term> simplex;
  for (std::size_t k = 1; k <= j; ++k) {
    simplex.push_back({s.lp.AddVariable(0.0, kInfinity), 1.0});
  }
  s.lp.AddConstraint(std::move(simplex), Relation::kEqual, 1.0);
  std::vector<Prospect> gens;
  for (std::size_t k = 1; k <= j; ++k) {
    gens.push_back(tilde(inst.theta(d.prospect_at(k)), d.level(k), inst.lipschitz()));
  }
  const double inv_c = 1.0 / inst.lipschitz();
  for (std::size_t i = 0; i < m.h.size(); ++i) {
    std::vector<Term> row;
    for (std::size_t k = 0; k < m.num_vars; ++k) {
      if (m.g[i][k] != 0.0) row.push_back({s.z[k], m.g[i][k]});
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (gens[k][i] != 0.0) row.push_back({p0 + static_cast<int>(k), -gens[k][i]});
    }
    row.push_back({s.v, -inv_c});
    s.lp.AddConstraint(std::move(row), Relation::kGreaterEqual, -m.h[i]);
  }
  return s;
}

// Law-invariant counterpart with variables (p, q, rho).
LevelSystem LawSystem(std::size_t j, const DecisionModel& m,
                      const Decomposition& d, const ValidatedInstance& inst,
                      double v_lo, double v_hi, Sense sense) {
  LevelSystem s{LpProblem(sense), {}, -1};
  s.z = AddDecisionSet(m, &s.lp);
  s.v = s.lp.AddVariable(v_lo, v_hi, 0.0, "v");
  const std::size_t T = m.scenarios;
  const std::size_t N = m.attributes;
  const int q = s.lp.AddVariable(0.0, kInfinity, 0.0, "q");
  std::vector<int> p(j + 1), rho(j + 1);
  std::vector<Term> simplex;
  std::vector<Term> level{{q, -inst.lipschitz()}, {s.v, -1.0}};
  for (std::size_t k = 1; k <= j; ++k) {
    p[k] = s.lp.AddVariable(0.0, kInfinity);
    simplex.push_back({p[k], 1.0});
    level.push_back({p[k], d.level(k)});
  }
  for (std::size_t k = 1; k <= j; ++k) {
    rho[k] = s.lp.num_variables();
    for (std::size_t e = 0; e < T * T; ++e) s.lp.AddVariable(0.0, kInfinity);
  }
  s.lp.AddConstraint(std::move(simplex), Relation::kEqual, 1.0);
  s.lp.AddConstraint(std::move(level), Relation::kGreaterEqual, 0.0);
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
      s.lp.AddConstraint(std::move(rows), Relation::kEqual, 0.0);
      s.lp.AddConstraint(std::move(cols), Relation::kEqual, 0.0);
    }
  }
  for (std::size_t u = 0; u < T; ++u) {
    for (std::size_t n = 0; n < N; ++n) {
      const std::size_t i = u * N + n;
      std::vector<Term> row{{q, -1.0}};
      for (std::size_t k = 0; k < m.num_vars; ++k) {
        if (m.g[i][k] != 0.0) row.push_back({s.z[k], -m.g[i][k]});
      }
      for (std::size_t k = 1; k <= j; ++k) {
        const Prospect& theta = inst.theta(d.prospect_at(k));
        for (std::size_t t = 0; t < T; ++t) {
          if (theta(t, n) != 0.0) row.push_back({r_var(k, t, u), theta(t, n)});
        }
      }
      s.lp.AddConstraint(std::move(row), Relation::kLessEqual, m.h[i]);
    }
  }
  return s;
}

LevelSystem Build(std::size_t j, const DecisionModel& m, const Decomposition& d,
                  const ValidatedInstance& inst, bool law, Sense sense) {
  if (j < 1 || j > d.size()) {
    throw ValidationError("level index " + std::to_string(j) + " outside 1.." +
                          std::to_string(d.size()));
  }
  const double v_hi = d.level(j);
  const double v_lo = j < d.size() ? d.level(j + 1) : -kInfinity;
  return law ? LawSystem(j, m, d, inst, v_lo, v_hi, sense)
             : BaseSystem(j, m, d, inst, v_lo, v_hi, sense);
}

LevelSolution Extract(const LevelSystem& s, const LpResult& r) {
  LevelSolution out;
  if (r.status == LpStatus::kInfeasible) return out;
  if (r.status != LpStatus::kOptimal) {
    throw SolverError("level program reported " + std::string(ToString(r.status)));
  }
  out.feasible = true;
  for (int k : s.z) out.z.push_back(r.x[k]);
  out.value = r.x[s.v];
  return out;
}

LevelSolution Feasibility(std::size_t j, const DecisionModel& m,
                          const Decomposition& d, const ValidatedInstance& inst,
                          bool law) {
  CheckCompatible(m, d, inst, law);
  LevelSystem s = Build(j, m, d, inst, law, Sense::kMinimize);
  return Extract(s, solve_lp(s.lp));
}

LevelSolution Optimize(std::size_t j, const DecisionModel& m,
                       const Decomposition& d, const ValidatedInstance& inst,
                       bool law) {
  CheckCompatible(m, d, inst, law);
  LevelSystem s = Build(j, m, d, inst, law, Sense::kMaximize);
  s.lp.SetCost(s.v, 1.0);
  LevelSolution out = Extract(s, solve_lp(s.lp));
  if (!out.feasible) {
    throw InfeasibleError("no decision is acceptable at level index " + std::to_string(j));
  }
  return out;
}

RobustSolution BinarySearch(const DecisionModel& m, const Decomposition& d,
                            const ValidatedInstance& inst, bool law) {
  validate_model(m);
  CheckCompatible(m, d, inst, law);
  long calls = 0;
  std::size_t lo = 1;
  std::size_t hi = d.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++calls;
    if (Feasibility(mid, m, d, inst, law).feasible) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  ++calls;
  const LevelSolution best = Optimize(lo, m, d, inst, law);
  return {best.z, best.value, lo, calls};
}

RobustSolution LevelSearch(const DecisionModel& m, const Decomposition& d,
                           const ValidatedInstance& inst, bool law) {
  validate_model(m);
  CheckCompatible(m, d, inst, law);
  long calls = 0;
  std::size_t j = 1;
  while (j < d.size()) {
    ++calls;
    if (Feasibility(j, m, d, inst, law).feasible) break;
    ++j;
  }
  ++calls;
  const LevelSolution best = Optimize(j, m, d, inst, law);
  return {best.z, best.value, j, calls};
}

}  // namespace

void validate_model(const DecisionModel& m) {
  const std::size_t M = m.num_vars;
  if (M == 0) throw ValidationError("model has no decision variables");
  if (m.lower.size() != M || m.upper.size() != M) {
    throw ValidationError("model bounds do not match the variable count");
  }
  if (m.A.size() != m.b.size() || m.Aeq.size() != m.beq.size()) {
    throw ValidationError("model constraint rows and right-hand sides differ in count");
  }
  for (const auto& row : m.A) {
    if (row.size() != M) throw ValidationError("model inequality row has wrong length");
  }
  for (const auto& row : m.Aeq) {
    if (row.size() != M) throw ValidationError("model equality row has wrong length");
  }
  if (m.scenarios == 0 || m.attributes == 0 ||
      m.g.size() != m.scenarios * m.attributes || m.h.size() != m.g.size()) {
    throw ValidationError("model reward map does not have scenarios x attributes rows");
  }
  for (const auto& row : m.g) {
    if (row.size() != M) throw ValidationError("model reward row has wrong length");
  }

  LpProblem lp(Sense::kMinimize);
  const std::vector<int> z = AddDecisionSet(m, &lp);
  if (solve_lp(lp).status != LpStatus::kOptimal) {
    throw ValidationError("model decision set is empty");
  }
  for (std::size_t k = 0; k < M; ++k) {
    if (std::isfinite(m.lower[k]) && std::isfinite(m.upper[k])) continue;
    for (double dir : {1.0, -1.0}) {
      if ((dir > 0 && std::isfinite(m.upper[k])) || (dir < 0 && std::isfinite(m.lower[k]))) {
        continue;
      }
      lp.SetCost(z[k], -dir);
      if (solve_lp(lp).status == LpStatus::kUnbounded) {
        throw ValidationError("model decision set is unbounded along variable " +
                              std::to_string(k));
      }
      lp.SetCost(z[k], 0.0);
    }
  }
}

LevelSolution feasibility(std::size_t j, const DecisionModel& m,
                          const Decomposition& d, const ValidatedInstance& inst) {
  return Feasibility(j, m, d, inst, false);
}

LevelSolution optimize_at_level(std::size_t j, const DecisionModel& m,
                                const Decomposition& d,
                                const ValidatedInstance& inst) {
  return Optimize(j, m, d, inst, false);
}

RobustSolution solve_pro(const DecisionModel& m, const Decomposition& d,
                         const ValidatedInstance& inst) {
  return BinarySearch(m, d, inst, false);
}

RobustSolution solve_pro_levelsearch(const DecisionModel& m,
                                     const Decomposition& d,
                                     const ValidatedInstance& inst) {
  return LevelSearch(m, d, inst, false);
}

LevelSolution feasibility_law(std::size_t j, const DecisionModel& m,
                              const Decomposition& d,
                              const ValidatedInstance& inst) {
  return Feasibility(j, m, d, inst, true);
}

LevelSolution optimize_at_level_law(std::size_t j, const DecisionModel& m,
                                    const Decomposition& d,
                                    const ValidatedInstance& inst) {
  return Optimize(j, m, d, inst, true);
}

RobustSolution solve_pro_law(const DecisionModel& m, const Decomposition& d,
                             const ValidatedInstance& inst) {
  return BinarySearch(m, d, inst, true);
}

RobustSolution solve_pro_law_levelsearch(const DecisionModel& m,
                                         const Decomposition& d,
                                         const ValidatedInstance& inst) {
  return LevelSearch(m, d, inst, true);
}

BenchmarkSolution solve_benchmark_pro(const DecisionModel& m,
                                      const std::vector<double>& f,
                                      const Prospect& benchmark,
                                      const Instance& inst) {
  if (f.size() != m.num_vars) {
    throw ValidationError("objective length does not match the variable count");
  }
  Instance renormalized = inst;
  renormalized.w0 = benchmark;
  const ValidatedInstance vi = validate_instance(renormalized);
  validate_model(m);
  BenchmarkSolution out;
  out.decomposition = solve_value_problem(vi);
  const bool law = vi.law_invariant();
  CheckCompatible(m, out.decomposition, vi, law);
  const std::size_t j = kappa(0.0, out.decomposition);
  LevelSystem s = law ? LawSystem(j, m, out.decomposition, vi, 0.0, 0.0, Sense::kMaximize)
                      : BaseSystem(j, m, out.decomposition, vi, 0.0, 0.0, Sense::kMaximize);
  for (std::size_t k = 0; k < m.num_vars; ++k) s.lp.SetCost(s.z[k], f[k]);
  const LpResult r = solve_lp(s.lp);
  if (r.status == LpStatus::kInfeasible) {
    throw InfeasibleError("no decision is at least as preferred as the benchmark");
  }
  if (r.status != LpStatus::kOptimal) {
    throw SolverError("benchmark program reported " + std::string(ToString(r.status)));
  }
  for (int k : s.z) out.z.push_back(r.x[k]);
  out.objective = r.objective;
  return out;
}

}  // namespace prorcf
