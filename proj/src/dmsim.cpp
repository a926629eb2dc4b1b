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

#include "prorcf/dmsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "prorcf/io.hpp"

namespace prorcf {

void CeDm::Validate() const {
  if (weights.empty()) throw ValidationError("decision maker needs at least one weight");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ValidationError("decision maker weights must be finite and non-negative");
    }
    total += w;
  }
  // The sum is checked to within 1e-3.
  if (std::fabs(total - 1.0) > 1e-3) {
    throw ValidationError("decision maker weights must sum to 1");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("risk parameter gamma must be positive");
  }
}

CeDm SampleNineAttributeDm() {
  return {{0.1837, 0.1668, 0.0645, 0.0124, 0.0071, 0.1737, 0.1240, 0.0442, 0.2235},
          0.05};
}

double utility(double x, double gamma) {
  return x >= 0.0 ? -std::expm1(-gamma * x) : gamma * x;
}

double inverse_utility(double u, double gamma) {
  if (!(u < 1.0)) throw ValidationError("mean utility outside the range of u");
  return u >= 0.0 ? -std::log1p(-u) / gamma : u / gamma;
}

double ce_value(const CeDm& dm, const Prospect& x) {
  if (dm.weights.size() != x.attributes()) {
    throw ValidationError("decision maker weights do not match the attribute count");
  }
  double mean = 0.0;
  for (std::size_t t = 0; t < x.scenarios(); ++t) {
    double s = 0.0;
    for (std::size_t n = 0; n < x.attributes(); ++n) s += dm.weights[n] * x(t, n);
    mean += utility(s, dm.gamma);
  }
  mean /= static_cast<double>(x.scenarios());
  return inverse_utility(mean, dm.gamma);
}

namespace {

struct PairDraw {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (preferred, dominated)
};

PairDraw DrawPairs(const std::vector<Prospect>& pool, std::size_t K,
                   const CeDm& dm, std::uint64_t seed) {
  const std::size_t n = pool.size();
  if (n == 0) throw ValidationError("prospect pool is empty");
  const std::size_t available = n * (n - 1) / 2;
  if (K > available) {
    throw ValidationError("pool of " + std::to_string(n) + " prospects has only " +
                          std::to_string(available) + " distinct pairs");
  }
  dm.Validate();
  std::vector<std::pair<std::size_t, std::size_t>> all;
  all.reserve(available);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  std::mt19937_64 rng(seed);
  PairDraw out;
  for (std::size_t k = 0; k < K; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, all.size() - 1);
    std::swap(all[k], all[pick(rng)]);
    auto [i, j] = all[k];
    if (ce_value(dm, pool[j]) > ce_value(dm, pool[i])) std::swap(i, j);
    out.pairs.emplace_back(i, j);
  }
  return out;
}

Prospect ComponentwiseMax(const std::vector<const Prospect*>& xs) {
  std::vector<double> v = xs.front()->values();
  for (const Prospect* x : xs) {
    if (!x->SameShape(*xs.front())) throw ValidationError("pool prospects differ in shape");
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::max(v[k], (*x)[k]);
  }
  return Prospect(xs.front()->scenarios(), xs.front()->attributes(), std::move(v));
}

Instance Assemble(const std::vector<Prospect>& pool, const PairDraw& draw,
                  std::size_t K, const Prospect& w0, double lipschitz, bool law) {
  Instance inst;
  inst.w0 = w0;
  inst.lipschitz = lipschitz;
  inst.law_invariant = law;
  for (std::size_t k = 0; k < K; ++k) {
    inst.pairs.push_back({pool[draw.pairs[k].first], pool[draw.pairs[k].second]});
  }
  return inst;
}

Prospect MaxOverDraw(const std::vector<Prospect>& pool, const PairDraw& draw,
                     std::size_t K) {
  std::vector<const Prospect*> used;
  for (std::size_t k = 0; k < K; ++k) {
    used.push_back(&pool[draw.pairs[k].first]);
    used.push_back(&pool[draw.pairs[k].second]);
  }
  if (used.empty()) {
    for (const Prospect& x : pool) used.push_back(&x);
  }
  return ComponentwiseMax(used);
}

}  // namespace

Instance generate_ecds(const std::vector<Prospect>& pool, std::size_t K,
                       const CeDm& dm, std::uint64_t seed, double lipschitz,
                       bool law_invariant) {
  const PairDraw draw = DrawPairs(pool, K, dm, seed);
  return Assemble(pool, draw, K, MaxOverDraw(pool, draw, K), lipschitz, law_invariant);
}

std::vector<Instance> nested_ecds(const std::vector<Prospect>& pool,
                                  const std::vector<std::size_t>& sizes,
                                  const CeDm& dm, std::uint64_t seed,
                                  double lipschitz, bool law_invariant) {
  if (sizes.empty()) return {};
  const std::size_t largest = *std::max_element(sizes.begin(), sizes.end());
  const PairDraw draw = DrawPairs(pool, largest, dm, seed);
  const Prospect w0 = MaxOverDraw(pool, draw, largest);
  std::vector<Instance> out;
  for (std::size_t K : sizes) {
    out.push_back(Assemble(pool, draw, K, w0, lipschitz, law_invariant));
  }
  return out;
}

namespace {

Prospect DrawRevenue(std::size_t N, std::size_t T, std::mt19937_64& rng) {
  std::normal_distribution<double> systematic(0.0, 0.02);
  std::vector<double> v(T * N);
  for (std::size_t t = 0; t < T; ++t) {
    const double phi = systematic(rng);
    for (std::size_t n = 0; n < N; ++n) {
      const double scale = static_cast<double>(n + 1);
      std::normal_distribution<double> idio(0.03 * scale, 0.025 * scale);
      v[t * N + n] = 10.0 * (phi + idio(rng));
    }
  }
  return Prospect(T, N, std::move(v));
}

}  // namespace

Prospect draw_capital_revenue(std::size_t N, std::size_t T, std::uint64_t seed) {
  if (N == 0 || T == 0) throw ValidationError("capital instance needs N, T >= 1");
  std::mt19937_64 rng(seed);
  return DrawRevenue(N, T, rng);
}

CapitalExperiment gen_capital_instance(std::size_t N, std::size_t T,
                                       std::uint64_t seed, std::size_t pool_size) {
  if (N == 0 || T == 0) throw ValidationError("capital instance needs N, T >= 1");
  std::mt19937_64 rng(seed);
  CapitalExperiment ex;
  for (std::size_t i = 0; i < pool_size; ++i) ex.pool.push_back(DrawRevenue(N, T, rng));
  ex.revenue = DrawRevenue(N, T, rng);

  DecisionModel& m = ex.model;
  const std::size_t M = T * N;
  m.num_vars = M;
  m.lower.assign(M, 0.0);
  m.upper.assign(M, ex.budget);
  for (std::size_t t = 0; t < T; ++t) {
    std::vector<double> row(M, 0.0);
    for (std::size_t n = 0; n < N; ++n) row[t * N + n] = 1.0;
    m.A.push_back(std::move(row));
    m.b.push_back(ex.budget);
  }
  m.scenarios = T;
  m.attributes = N;
  m.g.assign(M, std::vector<double>(M, 0.0));
  for (std::size_t i = 0; i < M; ++i) m.g[i][i] = 1.0;
  m.h = ex.revenue.values();
  return ex;
}

PortfolioData portfolio_from_assets(const std::vector<Prospect>& assets) {
  if (assets.empty()) throw ValidationError("portfolio needs at least one asset");
  const std::size_t T = assets.front().scenarios();
  for (const Prospect& a : assets) {
    if (a.scenarios() != T || a.attributes() != 1) {
      throw ValidationError("portfolio assets must be single-attribute with equal scenario counts");
    }
  }
  PortfolioData out;
  out.assets = assets;
  DecisionModel& m = out.model;
  const std::size_t M = assets.size();
  m.num_vars = M;
  m.lower.assign(M, 0.0);
  m.upper.assign(M, 1.0);
  m.Aeq.push_back(std::vector<double>(M, 1.0));
  m.beq.push_back(1.0);
  m.scenarios = T;
  m.attributes = 1;
  m.g.assign(T, std::vector<double>(M, 0.0));
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t k = 0; k < M; ++k) m.g[t][k] = assets[k][t];
  }
  m.h.assign(T, 0.0);
  return out;
}

PortfolioData load_returns_csv(const std::string& path) {
  const std::vector<std::vector<double>> rows = read_csv_matrix(path);
  const std::size_t T = rows.size();
  const std::size_t M = rows.front().size();
  std::vector<Prospect> assets;
  for (std::size_t k = 0; k < M; ++k) {
    std::vector<double> col(T);
    for (std::size_t t = 0; t < T; ++t) col[t] = rows[t][k];
    assets.push_back(Prospect::Column(std::move(col)));
  }
  return portfolio_from_assets(assets);
}

std::vector<double> project_simplex(const std::vector<double>& z) {
  std::vector<double> sorted = z;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cum += sorted[k];
    const double t = (cum - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - t > 0.0) theta = t;
  }
  std::vector<double> out(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) out[k] = std::max(z[k] - theta, 0.0);
  return out;
}

std::vector<double> project_capped_blocks(const std::vector<double>& z,
                                          std::size_t block, double budget) {
  std::vector<double> out(z.size());
  for (std::size_t start = 0; start < z.size(); start += block) {
    std::vector<double> y(z.begin() + static_cast<long>(start),
                          z.begin() + static_cast<long>(start + block));
    double total = 0.0;
    for (double& e : y) {
      e = std::max(e, 0.0);
      total += e;
    }
    if (total > budget) {
      std::vector<double> scaled(block);
      for (std::size_t k = 0; k < block; ++k) scaled[k] = z[start + k] / budget;
      y = project_simplex(scaled);
      for (double& e : y) e *= budget;
    }
    std::copy(y.begin(), y.end(), out.begin() + static_cast<long>(start));
  }
  return out;
}

std::vector<double> maximize_expected_utility(
    const DecisionModel& m, const CeDm& dm,
    const std::function<std::vector<double>(const std::vector<double>&)>& project,
    double tol, int max_iterations) {
  dm.Validate();
  if (dm.weights.size() != m.attributes) {
    throw ValidationError("decision maker weights do not match the model attributes");
  }
  const std::size_t T = m.scenarios;
  const std::size_t N = m.attributes;
  const std::size_t M = m.num_vars;

  auto objective = [&](const std::vector<double>& z) {
    const Prospect r = m.Reward(z);
    double total = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      double s = 0.0;
      for (std::size_t n = 0; n < N; ++n) s += dm.weights[n] * r(t, n);
      total += utility(s, dm.gamma);
    }
    return total / static_cast<double>(T);
  };
  auto gradient = [&](const std::vector<double>& z) {
    const Prospect r = m.Reward(z);
    std::vector<double> grad(M, 0.0);
    for (std::size_t t = 0; t < T; ++t) {
      double s = 0.0;
      for (std::size_t n = 0; n < N; ++n) s += dm.weights[n] * r(t, n);
      const double slope = s >= 0.0 ? dm.gamma * std::exp(-dm.gamma * s) : dm.gamma;
      for (std::size_t n = 0; n < N; ++n) {
        const double c = slope * dm.weights[n] / static_cast<double>(T);
        const std::vector<double>& g = m.g[t * N + n];
        for (std::size_t k = 0; k < M; ++k) grad[k] += c * g[k];
      }
    }
    return grad;
  };

  std::vector<double> z = project(std::vector<double>(M, 0.0));
  double fz = objective(z);
  double step = 1.0;
  for (int it = 0; it < max_iterations; ++it) {
    const std::vector<double> grad = gradient(z);
    std::vector<double> next;
    double fnext = fz;
    // Backtracking on the projection arc with a sufficient-increase test.
    for (int tries = 0; tries < 60; ++tries) {
      std::vector<double> trial(M);
      for (std::size_t k = 0; k < M; ++k) trial[k] = z[k] + step * grad[k];
      next = project(trial);
      double moved = 0.0;
      double inner = 0.0;
      for (std::size_t k = 0; k < M; ++k) {
        moved += (next[k] - z[k]) * (next[k] - z[k]);
        inner += grad[k] * (next[k] - z[k]);
      }
      fnext = objective(next);
      if (fnext >= fz + 0.5 * inner - 1e-15 || moved == 0.0) break;
      step *= 0.5;
    }
    double change = 0.0;
    for (std::size_t k = 0; k < M; ++k) change = std::max(change, std::fabs(next[k] - z[k]));
    z = std::move(next);
    fz = fnext;
    if (change <= tol) break;
    step *= 2.0;
  }
  return z;
}

}  // namespace prorcf
