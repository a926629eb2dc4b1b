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

#include "prorcf/oracle.hpp"

#include <cstdint>
#include <numeric>
#include <string>

#include "prorcf/lp.hpp"

namespace prorcf {
namespace {

class OrderingSearch {
 public:
  OrderingSearch(const ValidatedInstance& inst, bool law)
      : inst_(inst),
        J_(inst.size()),
        tn_(inst.theta(0).size()),
        perms_(law ? AllPermutations(inst.scenarios())
                   : std::vector<Permutation>{Permutation::Identity(inst.scenarios())}),
        block_(J_, -1) {
    for (std::size_t id = 0; id < J_; ++id) {
      images_.emplace_back();
      for (const Permutation& p : perms_) {
        Prospect img = permute(inst.theta(id), p);
        bool dup = false;
        for (const Prospect& q : images_.back()) dup = dup || q == img;
        if (!dup) images_.back().push_back(std::move(img));
      }
    }
  }

  OracleResult Run() {
    Descend(0);
    if (best_values_.empty()) throw InfeasibleError("value problem has no feasible ordering");
    return {best_values_, lp_calls_};
  }

 private:
  int v_var(std::size_t id) const { return static_cast<int>(id); }
  int s_var(std::size_t id, std::size_t k) const {
    return static_cast<int>(J_ + id * tn_ + k);
  }

  // Solves the relaxation for the current prefix of `blocks` blocks.
  bool Relaxation(int blocks, double* value, std::vector<double>* values) {
    LpProblem lp(Sense::kMinimize);
    for (std::size_t id = 0; id < J_; ++id) lp.AddVariable(-kInfinity, kInfinity, 1.0);
    for (std::size_t id = 0; id < J_; ++id) {
      for (std::size_t k = 0; k < tn_; ++k) lp.AddVariable(0.0, kInfinity);
    }
    for (std::size_t id = 0; id < J_; ++id) {
      std::vector<Term> budget;
      for (std::size_t k = 0; k < tn_; ++k) budget.push_back({s_var(id, k), 1.0});
      lp.AddConstraint(std::move(budget), Relation::kLessEqual, inst_.lipschitz());
    }
    lp.AddConstraint({{v_var(0), 1.0}}, Relation::kEqual, 0.0);
    for (const Edge& e : inst_.edges()) {
      lp.AddConstraint({{v_var(e.preferred), 1.0}, {v_var(e.dominated), -1.0}},
                       Relation::kGreaterEqual, 0.0);
    }
    std::vector<std::size_t> rep(blocks, J_);
    for (std::size_t id = 0; id < J_; ++id) {
      if (block_[id] >= 0 && rep[block_[id]] == J_) rep[block_[id]] = id;
    }
    for (std::size_t id = 0; id < J_; ++id) {
      const int b = block_[id];
      if (b >= 0 && rep[b] != id) {
        lp.AddConstraint({{v_var(id), 1.0}, {v_var(rep[b]), -1.0}}, Relation::kEqual, 0.0);
      }
    }
    for (int b = 1; b < blocks; ++b) {
      lp.AddConstraint({{v_var(rep[b - 1]), 1.0}, {v_var(rep[b]), -1.0}},
                       Relation::kGreaterEqual, 0.0);
    }
    // An unassigned member sits below every assigned block.
    const int effective_block_of_unassigned = blocks;
    for (std::size_t id = 0; id < J_; ++id) {
      const int b = block_[id] >= 0 ? block_[id] : effective_block_of_unassigned;
      if (block_[id] < 0 && blocks > 0) {
        lp.AddConstraint({{v_var(rep[blocks - 1]), 1.0}, {v_var(id), -1.0}},
                         Relation::kGreaterEqual, 0.0);
      }
      const Prospect& theta = inst_.theta(id);
      for (std::size_t other = 0; other < J_; ++other) {
        if (block_[other] < 0 || block_[other] >= b) continue;
        for (const Prospect& img : images_[other]) {
          std::vector<Term> row{{v_var(id), 1.0}, {v_var(other), -1.0}};
          for (std::size_t k = 0; k < tn_; ++k) {
            const double c = img[k] - theta[k];
            if (c != 0.0) row.push_back({s_var(id, k), c});
          }
          lp.AddConstraint(std::move(row), Relation::kGreaterEqual, 0.0);
        }
      }
    }
    ++lp_calls_;
    const LpResult r = solve_lp(lp);
    if (r.status != LpStatus::kOptimal) return false;
    *value = r.objective;
    if (values) values->assign(r.x.begin(), r.x.begin() + static_cast<long>(J_));
    return true;
  }

  void Descend(int blocks) {
    std::vector<std::size_t> free_ids;
    for (std::size_t id = 0; id < J_; ++id) {
      if (block_[id] < 0) free_ids.push_back(id);
    }
    if (free_ids.empty()) {
      double value;
      std::vector<double> values;
      if (Relaxation(blocks, &value, &values) && value < best_ - 1e-9) {
        best_ = value;
        best_values_ = values;
      }
      return;
    }
    if (blocks > 0) {
      double bound;
      if (!Relaxation(blocks, &bound, nullptr)) return;
      if (bound >= best_ - 1e-9) return;
    }
    const std::uint32_t full = (1u << free_ids.size()) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      // The first block always contains the normalizing prospect.
      if (blocks == 0 && block_[0] < 0 && !(mask & 1u)) continue;
      for (std::size_t i = 0; i < free_ids.size(); ++i) {
        if (mask & (1u << i)) block_[free_ids[i]] = blocks;
      }
      Descend(blocks + 1);
      for (std::size_t i = 0; i < free_ids.size(); ++i) {
        if (mask & (1u << i)) block_[free_ids[i]] = -1;
      }
    }
  }

  const ValidatedInstance& inst_;
  std::size_t J_;
  std::size_t tn_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<Prospect>> images_;
  std::vector<int> block_;
  double best_ = kInfinity;
  std::vector<double> best_values_;
  long lp_calls_ = 0;
};

}  // namespace

OracleResult oracle_value_problem(const ValidatedInstance& inst) {
  if (inst.size() > 8) {
    throw ValidationError("oracle supports at most 8 distinct prospects, got " +
                          std::to_string(inst.size()));
  }
  return OrderingSearch(inst, false).Run();
}

OracleResult oracle_value_problem_law(const ValidatedInstance& inst) {
  if (inst.size() > 8 || inst.scenarios() > 5) {
    throw ValidationError("law-invariant oracle supports at most 8 prospects and 5 scenarios");
  }
  return OrderingSearch(inst, true).Run();
}

}  // namespace prorcf
