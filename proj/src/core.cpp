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

#include "prorcf/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace prorcf {

Prospect::Prospect(std::size_t scenarios, std::size_t attributes,
                   std::vector<double> values)
    : scenarios_(scenarios), attributes_(attributes), values_(std::move(values)) {
  if (scenarios_ == 0 || attributes_ == 0) {
    throw ValidationError("prospect dimensions must be positive");
  }
  if (values_.size() != scenarios_ * attributes_) {
    throw ValidationError("prospect holds " + std::to_string(values_.size()) +
                          " values, expected " +
                          std::to_string(scenarios_ * attributes_));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("prospect entry is not finite");
  }
}

Prospect Prospect::Scalar(double value) { return Prospect(1, 1, {value}); }

Prospect Prospect::Column(std::vector<double> values) {
  const std::size_t t = values.size();
  return Prospect(t, 1, std::move(values));
}

Prospect Prospect::Constant(std::size_t scenarios, std::size_t attributes,
                            double value) {
  return Prospect(scenarios, attributes,
                  std::vector<double>(scenarios * attributes, value));
}

bool Prospect::Dominates(const Prospect& other) const {
  if (!SameShape(other)) throw ValidationError("prospect dimension mismatch");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < other.values_[k]) return false;
  }
  return true;
}

Permutation::Permutation(std::vector<std::size_t> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t image : mapping_) {
    if (image >= mapping_.size() || seen[image]) {
      throw ValidationError("permutation is not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::Identity(std::size_t size) {
  std::vector<std::size_t> mapping(size);
  std::iota(mapping.begin(), mapping.end(), std::size_t{0});
  return Permutation(std::move(mapping));
}

std::vector<Permutation> AllPermutations(std::size_t size) {
  std::vector<std::size_t> mapping(size);
  std::iota(mapping.begin(), mapping.end(), std::size_t{0});
  std::vector<Permutation> all;
  do {
    all.emplace_back(mapping);
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return all;
}

double inf_norm_distance(const Prospect& x, const Prospect& y) {
  if (!x.SameShape(y)) throw ValidationError("prospect dimension mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    d = std::max(d, std::abs(x[k] - y[k]));
  }
  return d;
}

Prospect permute(const Prospect& x, const Permutation& sigma) {
  if (sigma.size() != x.scenarios()) {
    throw ValidationError("permutation size does not match scenario count");
  }
  const std::size_t n = x.attributes();
  std::vector<double> out(x.size());
  for (std::size_t t = 0; t < x.scenarios(); ++t) {
    auto src = x.row(sigma[t]);
    std::copy(src.begin(), src.end(), out.begin() + t * n);
  }
  return Prospect(x.scenarios(), n, std::move(out));
}

Prospect tilde(const Prospect& theta, double v, double lipschitz) {
  if (!(lipschitz > 0.0)) throw ValidationError("Lipschitz modulus must be positive");
  return shift(theta, -v / lipschitz);
}

Prospect shift(const Prospect& x, double beta) {
  std::vector<double> out = x.values();
  for (double& e : out) e += beta;
  return Prospect(x.scenarios(), x.attributes(), std::move(out));
}

std::size_t ValidatedInstance::Find(const Prospect& x) const {
  auto it = std::find(theta_.begin(), theta_.end(), x);
  return static_cast<std::size_t>(it - theta_.begin());
}

ValidatedInstance validate_instance(const Instance& inst) {
  if (!(inst.lipschitz > 0.0) || !std::isfinite(inst.lipschitz)) {
    throw ValidationError("Lipschitz modulus must be positive and finite");
  }
  if (inst.w0.empty()) throw ValidationError("normalizing prospect is empty");

  ValidatedInstance out;
  out.source_ = inst;
  out.theta_.push_back(inst.w0);

  auto intern = [&](const Prospect& x, const char* role, std::size_t k) {
    if (!x.SameShape(inst.w0)) {
      throw ValidationError(std::string(role) + " prospect of pair " +
                            std::to_string(k + 1) +
                            " does not match the normalizing prospect's dimensions");
    }
    if (!inst.w0.Dominates(x)) {
      throw ValidationError(
          std::string(role) + " prospect of pair " + std::to_string(k + 1) +
          " exceeds the normalizing prospect in some entry; use the componentwise "
          "maximum of all prospects as the normalizing prospect");
    }
    std::size_t id = out.Find(x);
    if (id == out.theta_.size()) out.theta_.push_back(x);
    return id;
  };

  for (std::size_t k = 0; k < inst.pairs.size(); ++k) {
    const std::size_t w = intern(inst.pairs[k].preferred, "preferred", k);
    const std::size_t y = intern(inst.pairs[k].dominated, "dominated", k);
    if (w == y) continue;
    Edge e{w, y};
    if (std::find(out.edges_.begin(), out.edges_.end(), e) == out.edges_.end()) {
      out.edges_.push_back(e);
    }
  }
  return out;
}

}  // namespace prorcf
