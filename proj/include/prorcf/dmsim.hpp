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

#ifndef PRORCF_DMSIM_HPP_
#define PRORCF_DMSIM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prorcf/core.hpp"
#include "prorcf/pro.hpp"

namespace prorcf {

// Simulated decision maker: certainty equivalent of a weighted sum of
// attributes under u(x) = 1 - exp(-gamma x) for x >= 0 and gamma x below 0.
struct CeDm {
  std::vector<double> weights;
  double gamma = 0.05;

  void Validate() const;
};

// Sample weights for N = 9 attributes.
CeDm SampleNineAttributeDm();

double utility(double x, double gamma);
double inverse_utility(double u, double gamma);

double ce_value(const CeDm& dm, const Prospect& x);

// Samples K distinct unordered index pairs from the pool, orders each pair by
// certainty equivalent and uses the componentwise maximum of all sampled
// prospects as normalizing prospect. Deterministic in the seed. Pairs are
// drawn sequentially, so the first K' < K pairs for a seed equal the pairs
// drawn with K' for the same seed.
Instance generate_ecds(const std::vector<Prospect>& pool, std::size_t K,
                       const CeDm& dm, std::uint64_t seed,
                       double lipschitz = 1.0, bool law_invariant = false);

// Instances with the first sizes[i] pairs of one draw and a shared
// normalizing prospect (the componentwise maximum over the largest draw).
std::vector<Instance> nested_ecds(const std::vector<Prospect>& pool,
                                  const std::vector<std::size_t>& sizes,
                                  const CeDm& dm, std::uint64_t seed,
                                  double lipschitz = 1.0,
                                  bool law_invariant = false);

struct CapitalExperiment {
  std::vector<Prospect> pool;  // independent revenue draws for elicitation
  Prospect revenue;            // the institution's revenue X
  DecisionModel model;         // G(Z) = X + Z, Z >= 0, sum_n Z_n(w) <= budget
  double budget = 0.5;
};

// Revenues X_n = 10 (phi + xi_n) with phi ~ Normal(0, 0.02) and
// xi_n ~ Normal(0.03 n, 0.025 n) (standard deviations, n = 1..N).
Prospect draw_capital_revenue(std::size_t N, std::size_t T, std::uint64_t seed);
CapitalExperiment gen_capital_instance(std::size_t N, std::size_t T,
                                       std::uint64_t seed,
                                       std::size_t pool_size = 40);

struct PortfolioData {
  std::vector<Prospect> assets;  // one T x 1 prospect per asset
  DecisionModel model;           // simplex weights, reward sum_m R_m z_m
};

PortfolioData portfolio_from_assets(const std::vector<Prospect>& assets);
// CSV with T rows and one column per asset.
PortfolioData load_returns_csv(const std::string& path);

// Maximizes E[u(<w, reward(z)>)] by projected gradient ascent. The caller
// supplies the Euclidean projection onto the decision set.
std::vector<double> maximize_expected_utility(
    const DecisionModel& m, const CeDm& dm,
    const std::function<std::vector<double>(const std::vector<double>&)>& project,
    double tol = 1e-6, int max_iterations = 20000);

// Euclidean projections for the two experiment families.
std::vector<double> project_simplex(const std::vector<double>& z);
// Each consecutive block of `block` entries is projected onto
// { y >= 0, sum y <= budget }.
std::vector<double> project_capped_blocks(const std::vector<double>& z,
                                          std::size_t block, double budget);

}  // namespace prorcf

#endif  // PRORCF_DMSIM_HPP_
