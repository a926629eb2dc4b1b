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

#ifndef PRORCF_CORE_HPP_
#define PRORCF_CORE_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prorcf {

// Error hierarchy. The command-line driver maps each family to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (dimensions, dominance, metadata).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A well-posed problem that has no feasible point.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The linear programming backend failed to reach a verified answer.
class SolverError : public Error {
 public:
  using Error::Error;
};

// A T x N matrix of payoffs, stored scenario-major: entry (t, n) lives at
// index t * N + n.
class Prospect {
 public:
  Prospect() = default;
  Prospect(std::size_t scenarios, std::size_t attributes,
           std::vector<double> values);

  // Convenience constructors for the common N = 1 case.
  static Prospect Scalar(double value);
  static Prospect Column(std::vector<double> values);
  static Prospect Constant(std::size_t scenarios, std::size_t attributes,
                           double value);

  std::size_t scenarios() const { return scenarios_; }
  std::size_t attributes() const { return attributes_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double operator()(std::size_t t, std::size_t n) const {
    return values_[t * attributes_ + n];
  }
  double& operator()(std::size_t t, std::size_t n) {
    return values_[t * attributes_ + n];
  }
  double operator[](std::size_t k) const { return values_[k]; }
  double& operator[](std::size_t k) { return values_[k]; }

  const std::vector<double>& values() const { return values_; }
  std::span<const double> row(std::size_t t) const {
    return {values_.data() + t * attributes_, attributes_};
  }

  bool SameShape(const Prospect& other) const {
    return scenarios_ == other.scenarios_ && attributes_ == other.attributes_;
  }
  // True when every entry of *this is >= the matching entry of other.
  bool Dominates(const Prospect& other) const;

  friend bool operator==(const Prospect&, const Prospect&) = default;

 private:
  std::size_t scenarios_ = 0;
  std::size_t attributes_ = 0;
  std::vector<double> values_;
};

struct EcdsPair {
  Prospect preferred;
  Prospect dominated;
  friend bool operator==(const EcdsPair&, const EcdsPair&) = default;
};

struct Instance {
  Prospect w0;
  std::vector<EcdsPair> pairs;
  double lipschitz = 1.0;
  bool law_invariant = false;
  friend bool operator==(const Instance&, const Instance&) = default;
};

// A bijection on scenario indices {0, ..., T-1}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> mapping);
  static Permutation Identity(std::size_t size);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator[](std::size_t t) const { return mapping_[t]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

 private:
  std::vector<std::size_t> mapping_;
};

// Every permutation of {0, ..., size-1} in lexicographic order.
std::vector<Permutation> AllPermutations(std::size_t size);

double inf_norm_distance(const Prospect& x, const Prospect& y);

// Row t of the result is row sigma(t) of x; attributes move together.
Prospect permute(const Prospect& x, const Permutation& sigma);

// theta - (v / C) * 1.
Prospect tilde(const Prospect& theta, double v, double lipschitz);

// x + beta * 1.
Prospect shift(const Prospect& x, double beta);

// A directed comparison between members of the deduplicated prospect set.
struct Edge {
  std::size_t preferred;
  std::size_t dominated;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// An instance together with its deduplicated prospect set. Member 0 is
// always the normalizing prospect; the remaining members follow the order
// W1, Y1, W2, Y2, ... with later exact duplicates folded into earlier ones.
class ValidatedInstance {
 public:
  const Instance& source() const { return source_; }
  const std::vector<Prospect>& theta() const { return theta_; }
  const Prospect& theta(std::size_t id) const { return theta_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t size() const { return theta_.size(); }
  std::size_t scenarios() const { return theta_.front().scenarios(); }
  std::size_t attributes() const { return theta_.front().attributes(); }
  double lipschitz() const { return source_.lipschitz; }
  bool law_invariant() const { return source_.law_invariant; }

  // Member id of an exact copy of x, or size() if none.
  std::size_t Find(const Prospect& x) const;

  friend bool operator==(const ValidatedInstance&,
                         const ValidatedInstance&) = default;

 private:
  friend ValidatedInstance validate_instance(const Instance& inst);
  Instance source_;
  std::vector<Prospect> theta_;
  std::vector<Edge> edges_;
};

ValidatedInstance validate_instance(const Instance& inst);

}  // namespace prorcf

#endif  // PRORCF_CORE_HPP_
