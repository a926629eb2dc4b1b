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

#ifndef PRORCF_TESTS_SUPPORT_HPP_
#define PRORCF_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "prorcf/core.hpp"
#include "prorcf/dmsim.hpp"
#include "prorcf/pro.hpp"

namespace prorcf::testing {

// T = N = 1, C = 1, W0 = 5, one comparison 3 over 1.
inline Instance FixtureA() {
  Instance inst;
  inst.w0 = Prospect::Scalar(5.0);
  inst.pairs.push_back({Prospect::Scalar(3.0), Prospect::Scalar(1.0)});
  return inst;
}

// T = 2, N = 1, C = 1, W0 = (5, 5), one comparison (3, 4) over (1, 3).
inline Instance FixtureB() {
  Instance inst;
  inst.w0 = Prospect::Column({5.0, 5.0});
  inst.pairs.push_back({Prospect::Column({3.0, 4.0}), Prospect::Column({1.0, 3.0})});
  inst.law_invariant = true;
  return inst;
}

// Portfolio over the simplex with two single-scenario assets paying 4 and 2.
inline DecisionModel FixtureAPortfolio() {
  return portfolio_from_assets({Prospect::Scalar(4.0), Prospect::Scalar(2.0)}).model;
}

// Half of the draws round every entry to an integer.
inline Prospect RandomProspect(std::mt19937_64& rng, std::size_t T, std::size_t N,
                               double lo = 0.0, double hi = 8.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::bernoulli_distribution lattice(0.5);
  const bool round = lattice(rng);
  std::vector<double> v(T * N);
  for (double& e : v) e = round ? std::round(u(rng)) : u(rng);
  return Prospect(T, N, std::move(v));
}

// Random instance over a pool of `pool` prospects with `pairs` comparisons.
// Orientation follows a random linear utility when `consistent`, otherwise
// it is arbitrary. The normalizing prospect is the componentwise maximum
// plus a random nonnegative margin.
inline Instance RandomInstance(std::mt19937_64& rng, std::size_t pool, std::size_t pairs,
                               std::size_t T, std::size_t N, double C, bool law,
                               bool consistent = true) {
  std::vector<Prospect> members;
  for (std::size_t k = 0; k < pool; ++k) members.push_back(RandomProspect(rng, T, N));
  std::vector<double> weights(T * N);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (double& w : weights) w = u01(rng);
  auto score = [&](const Prospect& x) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += weights[k] * x[k];
    return s;
  };
  Instance inst;
  inst.lipschitz = C;
  inst.law_invariant = law;
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t k = 0; k < pairs; ++k) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (pool > 1) {
      while (b == a) b = pick(rng);
    }
    bool a_first = consistent ? score(members[a]) >= score(members[b]) : flip(rng);
    if (!a_first) std::swap(a, b);
    inst.pairs.push_back({members[a], members[b]});
  }
  std::vector<double> top(T * N, -1e300);
  for (const auto& p : inst.pairs) {
    for (std::size_t k = 0; k < top.size(); ++k) {
      top[k] = std::max({top[k], p.preferred[k], p.dominated[k]});
    }
  }
  if (inst.pairs.empty()) top = members.front().values();
  std::uniform_int_distribution<int> margin(0, 2);
  for (double& e : top) e += margin(rng);
  inst.w0 = Prospect(T, N, std::move(top));
  return inst;
}

}  // namespace prorcf::testing

#endif  // PRORCF_TESTS_SUPPORT_HPP_
