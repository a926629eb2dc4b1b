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

#include "prorcf/value.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace prorcf {

namespace {

constexpr double kGuard = 1e-9;

}  // namespace

Decomposition::Decomposition(bool law_invariant,
                             std::vector<DecompositionEntry> entries,
                             long lp_calls)
    : law_invariant_(law_invariant),
      entries_(std::move(entries)),
      lp_calls_(lp_calls) {}

double Decomposition::value_of(std::size_t id) const {
  for (const DecompositionEntry& e : entries_) {
    if (e.prospect == id) return e.value;
  }
  throw ValidationError("prospect " + std::to_string(id) +
                        " is not in the decomposition");
}

std::vector<double> Decomposition::values_by_id() const {
  std::vector<double> out(entries_.size(), 0.0);
  for (const DecompositionEntry& e : entries_) out.at(e.prospect) = e.value;
  return out;
}

void Decomposition::CheckAgainst(const ValidatedInstance& inst) const {
  if (law_invariant_ != inst.law_invariant()) {
    throw ValidationError(
        law_invariant_ ? "decomposition is law-invariant but the instance is not"
                       : "decomposition is not law-invariant but the instance is");
  }
  if (entries_.size() != inst.size()) {
    throw ValidationError("decomposition has " + std::to_string(entries_.size()) +
                          " entries, instance has " + std::to_string(inst.size()) +
                          " distinct prospects");
  }
  std::vector<bool> seen(entries_.size(), false);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const DecompositionEntry& e = entries_[k];
    if (e.prospect >= seen.size() || seen[e.prospect]) {
      throw ValidationError("decomposition ids are not a permutation of the prospect set");
    }
    seen[e.prospect] = true;
    if (!std::isfinite(e.value)) throw ValidationError("non-finite decomposition value");
    if (k > 0 && e.value > entries_[k - 1].value) {
      throw ValidationError("decomposition values are not non-increasing");
    }
  }
  if (entries_.front().prospect != 0 || entries_.front().value != 0.0) {
    throw ValidationError("decomposition must start with the normalizing prospect at 0");
  }
}

PlpResult solve_interpolation(const ValidatedInstance& inst, const Prospect& x,
                              const Decomposition& d, std::size_t prefix,
                              const std::vector<double>& pins) {
  const std::size_t tn = x.size();
  LpProblem lp(Sense::kMinimize);
  const int v = lp.AddVariable(-kInfinity, kInfinity, 1.0, "v");
  std::vector<Term> budget;
  for (std::size_t k = 0; k < tn; ++k) {
    const int s = lp.AddVariable(0.0, kInfinity, 0.0, "s" + std::to_string(k));
    budget.push_back({s, 1.0});
  }
  for (std::size_t j = 1; j <= prefix; ++j) {
    const Prospect& other = inst.theta(d.prospect_at(j));
    std::vector<Term> row{{v, 1.0}};
    for (std::size_t k = 0; k < tn; ++k) {
      const double c = other[k] - x[k];
      if (c != 0.0) row.push_back({static_cast<int>(1 + k), c});
    }
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, d.level(j));
  }
  lp.AddConstraint(std::move(budget), Relation::kLessEqual, inst.lipschitz(), "budget");
  for (double p : pins) lp.AddConstraint({{v, 1.0}}, Relation::kEqual, p, "pin");

  const LpResult r = solve_lp(lp);
  PlpResult out;
  if (r.status == LpStatus::kInfeasible) return out;
  if (r.status != LpStatus::kOptimal) {
    throw SolverError("interpolation program reported " + std::string(ToString(r.status)));
  }
  out.feasible = true;
  out.value = r.x[v];
  out.subgradient.assign(r.x.begin() + 1, r.x.begin() + 1 + static_cast<long>(tn));
  return out;
}

PlpResult solve_interpolation_law(const ValidatedInstance& inst,
                                  const Prospect& x, const Decomposition& d,
                                  std::size_t prefix,
                                  const std::vector<double>& pins) {
  const std::size_t T = x.scenarios();
  const std::size_t N = x.attributes();
  const std::size_t tn = T * N;
  LpProblem lp(Sense::kMinimize);
  const int v = lp.AddVariable(-kInfinity, kInfinity, 1.0, "v");
  std::vector<Term> budget;
  for (std::size_t k = 0; k < tn; ++k) {
    const int s = lp.AddVariable(0.0, kInfinity, 0.0, "s" + std::to_string(k));
    budget.push_back({s, 1.0});
  }
  auto s_var = [](std::size_t u, std::size_t n, std::size_t N_) {
    return static_cast<int>(1 + u * N_ + n);
  };
  std::vector<int> y_base(prefix + 1), w_base(prefix + 1);
  for (std::size_t j = 1; j <= prefix; ++j) {
    const Prospect& other = inst.theta(d.prospect_at(j));
    y_base[j] = lp.num_variables();
    for (std::size_t t = 0; t < T; ++t) lp.AddVariable(-kInfinity, kInfinity);
    w_base[j] = lp.num_variables();
    // w_0 = 0 normalizes the potentials (y, w).
    lp.AddVariable(0.0, 0.0);
    for (std::size_t u = 1; u < T; ++u) lp.AddVariable(-kInfinity, kInfinity);

    std::vector<Term> head{{v, 1.0}};
    for (std::size_t t = 0; t < T; ++t) {
      head.push_back({y_base[j] + static_cast<int>(t), 1.0});
      head.push_back({w_base[j] + static_cast<int>(t), 1.0});
    }
    for (std::size_t k = 0; k < tn; ++k) {
      if (x[k] != 0.0) head.push_back({static_cast<int>(1 + k), -x[k]});
    }
    lp.AddConstraint(std::move(head), Relation::kGreaterEqual, d.level(j));

    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t u = 0; u < T; ++u) {
        std::vector<Term> row;
        for (std::size_t n = 0; n < N; ++n) {
          const double c = other(t, n);
          if (c != 0.0) row.push_back({s_var(u, n, N), c});
        }
        row.push_back({y_base[j] + static_cast<int>(t), -1.0});
        row.push_back({w_base[j] + static_cast<int>(u), -1.0});
        lp.AddConstraint(std::move(row), Relation::kGreaterEqual, 0.0);
      }
    }
  }
  lp.AddConstraint(std::move(budget), Relation::kLessEqual, inst.lipschitz(), "budget");
  for (double p : pins) lp.AddConstraint({{v, 1.0}}, Relation::kEqual, p, "pin");

  const LpResult r = solve_lp(lp);
  PlpResult out;
  if (r.status == LpStatus::kInfeasible) return out;
  if (r.status != LpStatus::kOptimal) {
    throw SolverError("law-invariant interpolation program reported " +
                      std::string(ToString(r.status)));
  }
  out.feasible = true;
  out.value = r.x[v];
  out.subgradient.assign(r.x.begin() + 1, r.x.begin() + 1 + static_cast<long>(tn));
  for (std::size_t j = 1; j <= prefix; ++j) {
    out.row_duals.emplace_back(r.x.begin() + y_base[j], r.x.begin() + y_base[j] + static_cast<long>(T));
    out.col_duals.emplace_back(r.x.begin() + w_base[j], r.x.begin() + w_base[j] + static_cast<long>(T));
  }
  return out;
}

namespace {

void CheckCandidate(const ValidatedInstance& inst, std::size_t theta,
                    const Decomposition& d, std::size_t j) {
  if (theta >= inst.size()) throw ValidationError("prospect id out of range");
  if (j == 0 || j > d.size()) throw ValidationError("decomposition prefix out of range");
  for (std::size_t k = 1; k <= j; ++k) {
    if (d.prospect_at(k) == theta) {
      throw ValidationError("candidate prospect already belongs to the sorted prefix");
    }
  }
}

std::vector<double> Pins(const ValidatedInstance& inst, std::size_t theta,
                         const Decomposition& d, std::size_t j) {
  std::vector<double> pins;
  for (const Edge& e : inst.edges()) {
    if (e.preferred != theta) continue;
    for (std::size_t k = 1; k <= j; ++k) {
      if (d.prospect_at(k) == e.dominated) pins.push_back(d.level(k));
    }
  }
  return pins;
}

double Clip(const PlpResult& r, const Decomposition& d, std::size_t j) {
  const double last = d.level(j);
  return r.feasible ? std::min(last, r.value) : last;
}

template <typename Plp>
Decomposition Sort(const ValidatedInstance& inst, bool law, Plp plp) {
  Decomposition d(law, {{0, 0.0}}, 0);
  std::vector<std::size_t> remaining;
  for (std::size_t id = 1; id < inst.size(); ++id) remaining.push_back(id);

  while (!remaining.empty()) {
    const std::size_t j = d.size();
    const double last = d.level(j);
    std::size_t best_pos = 0;
    double best = -kInfinity;
    long calls = 0;
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      ++calls;
      const double pi = Clip(plp(inst, remaining[pos], d, j), d, j);
      if (pi >= last - kGuard) {
        best_pos = pos;
        best = last;
        break;
      }
      if (pi > best) {
        best = pi;
        best_pos = pos;
      }
    }
    d.AddLpCalls(calls);
    d.Append(remaining[best_pos], best);
    remaining.erase(remaining.begin() + static_cast<long>(best_pos));
  }
  return d;
}

}  // namespace

PlpResult solve_plp(const ValidatedInstance& inst, std::size_t theta,
                    const Decomposition& d, std::size_t j) {
  CheckCandidate(inst, theta, d, j);
  return solve_interpolation(inst, inst.theta(theta), d, j, Pins(inst, theta, d, j));
}

PlpResult solve_plp_law(const ValidatedInstance& inst, std::size_t theta,
                        const Decomposition& d, std::size_t j) {
  CheckCandidate(inst, theta, d, j);
  return solve_interpolation_law(inst, inst.theta(theta), d, j,
                                 Pins(inst, theta, d, j));
}

double predictor(const ValidatedInstance& inst, std::size_t theta,
                 const Decomposition& d, std::size_t j) {
  return Clip(solve_plp(inst, theta, d, j), d, j);
}

double predictor_law(const ValidatedInstance& inst, std::size_t theta,
                     const Decomposition& d, std::size_t j) {
  return Clip(solve_plp_law(inst, theta, d, j), d, j);
}

Decomposition sort_value_problem(const ValidatedInstance& inst) {
  if (inst.law_invariant()) {
    throw ValidationError("instance is law-invariant; use the law-invariant sort");
  }
  return Sort(inst, false, solve_plp);
}

Decomposition sort_value_problem_law(const ValidatedInstance& inst) {
  if (!inst.law_invariant()) {
    throw ValidationError("instance is not law-invariant; use the base sort");
  }
  return Sort(inst, true, solve_plp_law);
}

Decomposition solve_value_problem(const ValidatedInstance& inst) {
  return inst.law_invariant() ? sort_value_problem_law(inst)
                              : sort_value_problem(inst);
}

KinkedMajorant kinked_majorant(const ValidatedInstance& inst,
                               const Decomposition& d, std::size_t theta) {
  KinkedMajorant km{inst.theta(theta), d.value_of(theta),
                    std::vector<double>(inst.theta(theta).size(), 0.0)};
  std::size_t pos = 1;
  while (d.prospect_at(pos) != theta) ++pos;
  if (pos == 1) return km;
  const PlpResult r = d.law_invariant() ? solve_plp_law(inst, theta, d, pos - 1)
                                        : solve_plp(inst, theta, d, pos - 1);
  if (r.feasible) km.subgradient = r.subgradient;
  return km;
}

}  // namespace prorcf
