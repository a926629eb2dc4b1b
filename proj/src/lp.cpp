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

#include "prorcf/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>

#include "prorcf/core.hpp"
#include "prorcf/simd.hpp"

namespace prorcf {

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

int LpProblem::AddVariable(double lower, double upper, double cost,
                           std::string name) {
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  names_.push_back(std::move(name));
  return static_cast<int>(cost_.size()) - 1;
}

void LpProblem::SetCost(int var, double cost) { cost_.at(var) = cost; }

void LpProblem::SetBounds(int var, double lower, double upper) {
  lower_.at(var) = lower;
  upper_.at(var) = upper;
}

void LpProblem::AddConstraint(std::vector<Term> terms, Relation relation,
                              double rhs, std::string name) {
  rows_.push_back({std::move(terms), relation, rhs, std::move(name)});
}

void LpProblem::AddDenseConstraint(const std::vector<double>& coefs,
                                   Relation relation, double rhs,
                                   std::string name) {
  if (static_cast<int>(coefs.size()) != num_variables()) {
    throw ValidationError("constraint has " + std::to_string(coefs.size()) +
                          " coefficients for " +
                          std::to_string(num_variables()) + " variables");
  }
  std::vector<Term> terms;
  for (int j = 0; j < num_variables(); ++j) {
    if (coefs[j] != 0.0) terms.push_back({j, coefs[j]});
  }
  AddConstraint(std::move(terms), relation, rhs, std::move(name));
}

void LpProblem::Check() const {
  const int n = num_variables();
  for (int j = 0; j < n; ++j) {
    if (std::isnan(lower_[j]) || std::isnan(upper_[j]) || lower_[j] > upper_[j] ||
        lower_[j] == kInfinity || upper_[j] == -kInfinity) {
      throw ValidationError("variable " + std::to_string(j) + " has invalid bounds");
    }
    if (!std::isfinite(cost_[j])) {
      throw ValidationError("variable " + std::to_string(j) + " has a non-finite cost");
    }
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!std::isfinite(rows_[i].rhs)) {
      throw ValidationError("constraint " + std::to_string(i) + " has a non-finite rhs");
    }
    for (const Term& t : rows_[i].terms) {
      if (t.var < 0 || t.var >= n) {
        throw ValidationError("constraint " + std::to_string(i) +
                              " references variable " + std::to_string(t.var) +
                              " outside 0.." + std::to_string(n - 1));
      }
      if (!std::isfinite(t.coef)) {
        throw ValidationError("constraint " + std::to_string(i) +
                              " has a non-finite coefficient");
      }
    }
  }
}

namespace {

// Compact tableau over the homogeneous system A x - r = 0, where r holds one
// auxiliary variable per row carrying the row's bounds. Basic values are
// always an exact linear image of nonbasic values: x_B = T x_N. The pivot
// update is a rank-one AXPY over every row with a nonzero in the entering
// column.
//
// Degenerate stalls are broken by widening the bounds of the basic
// variables by small deterministic amounts; once optimal, the original
// bounds are restored and a short cleanup pass repairs any residual
// infeasibility.
class Simplex {
 public:
  Simplex(const LpProblem& p, const SimplexOptions& o);
  LpResult Run();

 private:
  enum class Phase { kOne, kTwo };

  struct Entering {
    int col = -1;
    double dir = 0.0;
  };
  struct Leaving {
    int row = -1;  // -1 means the entering variable flips bounds
    double step = 0.0;
    double bound = 0.0;
    bool unbounded = false;
  };
  struct Candidate {
    int row;
    double rate;
    double slack;
    double bound;
  };

  double* Row(int i) { return tab_.data() + static_cast<std::size_t>(i) * stride_; }
  const double* Row(int i) const {
    return tab_.data() + static_cast<std::size_t>(i) * stride_;
  }
  bool BasicInfeasible(int i, double* cost) const;
  bool PhaseOneCosts();
  void PhaseTwoCosts();
  Entering Price() const;
  Leaving Ratio(const Entering& e, Phase phase);
  void Apply(const Entering& e, const Leaving& l);
  void Pivot(int p, int q);
  void RefreshBasics();
  void Perturb();
  void Unperturb();
  LpStatus Iterate(Phase phase);

  const LpProblem& prob_;
  SimplexOptions opt_;
  const simd::Kernels& k_;
  int m_, n_;
  std::size_t stride_;
  std::vector<double> tab_;
  std::vector<double> d_;
  std::vector<double> lo_, up_, cost_, val_;
  std::vector<double> orig_lo_, orig_up_;
  std::vector<int> basis_, nonbasic_;
  std::vector<Candidate> cands_;
  long iterations_ = 0;
  long max_iterations_;
  int degenerate_run_ = 0;
  bool perturbed_ = false;
  double perturb_scale_ = 1e-7;
  std::uint64_t rng_ = 0x9e3779b97f4a7c15ULL;
};

Simplex::Simplex(const LpProblem& p, const SimplexOptions& o)
    : prob_(p), opt_(o), k_(simd::active()) {
  m_ = p.num_constraints();
  n_ = p.num_variables();
  stride_ = (static_cast<std::size_t>(n_) + 3) & ~std::size_t{3};
  tab_.assign(static_cast<std::size_t>(m_) * stride_, 0.0);
  d_.assign(stride_, 0.0);
  const int total = n_ + m_;
  lo_.resize(total);
  up_.resize(total);
  cost_.assign(total, 0.0);
  val_.assign(total, 0.0);
  const double sign = p.sense() == Sense::kMaximize ? -1.0 : 1.0;
  for (int j = 0; j < n_; ++j) {
    lo_[j] = p.lower(j);
    up_[j] = p.upper(j);
    cost_[j] = sign * p.cost(j);
    if (std::isfinite(lo_[j])) {
      val_[j] = lo_[j];
    } else if (std::isfinite(up_[j])) {
      val_[j] = up_[j];
    }
  }
  basis_.resize(m_);
  nonbasic_.resize(n_);
  for (int j = 0; j < n_; ++j) nonbasic_[j] = j;
  for (int i = 0; i < m_; ++i) {
    const LpConstraint& c = p.constraints()[i];
    const int r = n_ + i;
    basis_[i] = r;
    lo_[r] = c.relation == Relation::kLessEqual ? -kInfinity : c.rhs;
    up_[r] = c.relation == Relation::kGreaterEqual ? kInfinity : c.rhs;
    double* row = Row(i);
    for (const Term& t : c.terms) row[t.var] += t.coef;
  }
  orig_lo_ = lo_;
  orig_up_ = up_;
  RefreshBasics();
  max_iterations_ = o.max_iterations > 0 ? o.max_iterations
                                         : 50L * (m_ + n_) + 10000L;
}

void Simplex::RefreshBasics() {
  std::vector<double> xn(stride_, 0.0);
  for (int j = 0; j < n_; ++j) xn[j] = val_[nonbasic_[j]];
  for (int i = 0; i < m_; ++i) {
    val_[basis_[i]] = k_.dot(Row(i), xn.data(), static_cast<std::size_t>(n_));
  }
}

void Simplex::Perturb() {
  for (int i = 0; i < m_; ++i) {
    const int b = basis_[i];
    rng_ = rng_ * 6364136223846793005ULL + 1442695040888963407ULL;
    const double u = 1.0 + static_cast<double>(rng_ >> 11) * 0x1.0p-53;
    if (std::isfinite(lo_[b])) lo_[b] -= perturb_scale_ * u * (1.0 + std::fabs(lo_[b]));
    if (std::isfinite(up_[b])) up_[b] += perturb_scale_ * u * (1.0 + std::fabs(up_[b]));
  }
  perturbed_ = true;
}

void Simplex::Unperturb() {
  lo_ = orig_lo_;
  up_ = orig_up_;
  for (int j = 0; j < n_; ++j) {
    const int k = nonbasic_[j];
    val_[k] = std::clamp(val_[k], lo_[k], up_[k]);
  }
  RefreshBasics();
  perturbed_ = false;
  perturb_scale_ *= 0.1;
}

bool Simplex::BasicInfeasible(int i, double* cost) const {
  const int b = basis_[i];
  const double v = val_[b];
  if (v < lo_[b] - opt_.feasibility_tol) {
    *cost = -1.0;
    return true;
  }
  if (v > up_[b] + opt_.feasibility_tol) {
    *cost = 1.0;
    return true;
  }
  *cost = 0.0;
  return false;
}

bool Simplex::PhaseOneCosts() {
  std::fill(d_.begin(), d_.end(), 0.0);
  bool any = false;
  for (int i = 0; i < m_; ++i) {
    double c;
    if (BasicInfeasible(i, &c)) {
      any = true;
      k_.axpy(c, Row(i), d_.data(), static_cast<std::size_t>(n_));
    }
  }
  return any;
}

void Simplex::PhaseTwoCosts() {
  std::fill(d_.begin(), d_.end(), 0.0);
  for (int j = 0; j < n_; ++j) d_[j] = cost_[nonbasic_[j]];
  for (int i = 0; i < m_; ++i) {
    const double c = cost_[basis_[i]];
    if (c != 0.0) k_.axpy(c, Row(i), d_.data(), static_cast<std::size_t>(n_));
  }
}

Simplex::Entering Simplex::Price() const {
  Entering best;
  double best_score = 0.0;
  for (int j = 0; j < n_; ++j) {
    const int k = nonbasic_[j];
    if (lo_[k] == up_[k]) continue;
    const double dj = d_[j];
    double dir;
    if (dj < -opt_.optimality_tol && val_[k] < up_[k]) {
      dir = 1.0;
    } else if (dj > opt_.optimality_tol && val_[k] > lo_[k]) {
      dir = -1.0;
    } else {
      continue;
    }
    const double score = std::fabs(dj);
    if (score > best_score) {
      best = {j, dir};
      best_score = score;
    }
  }
  return best;
}

Simplex::Leaving Simplex::Ratio(const Entering& e, Phase phase) {
  const int q = e.col;
  const double tol = opt_.feasibility_tol;

  double colmax = 0.0;
  for (int i = 0; i < m_; ++i) colmax = std::max(colmax, std::fabs(Row(i)[q]));
  const double piv_tol = opt_.pivot_tol * std::max(1.0, colmax);

  cands_.clear();
  for (int i = 0; i < m_; ++i) {
    const double a = Row(i)[q] * e.dir;
    if (std::fabs(a) < piv_tol) continue;
    const int b = basis_[i];
    const double v = val_[b];
    if (phase == Phase::kOne && v < lo_[b] - tol) {
      if (a > 0.0) cands_.push_back({i, a, lo_[b] - v, lo_[b]});
    } else if (phase == Phase::kOne && v > up_[b] + tol) {
      if (a < 0.0) cands_.push_back({i, a, v - up_[b], up_[b]});
    } else if (a > 0.0) {
      if (std::isfinite(up_[b])) cands_.push_back({i, a, up_[b] - v, up_[b]});
    } else if (std::isfinite(lo_[b])) {
      cands_.push_back({i, a, v - lo_[b], lo_[b]});
    }
  }

  const int k = nonbasic_[q];
  const double range = up_[k] - lo_[k];

  Leaving out;
  if (cands_.empty()) {
    if (std::isfinite(range)) {
      out.step = range;
      return out;
    }
    out.unbounded = true;
    return out;
  }

  // Harris two-pass: bound the step with relaxed bounds, then take the
  // largest pivot among rows blocking within that bound.
  double bound = kInfinity;
  for (const Candidate& c : cands_) {
    bound = std::min(bound, (std::max(c.slack, 0.0) + tol) / std::fabs(c.rate));
  }
  int chosen = -1;
  double best_rate = 0.0;
  for (std::size_t c = 0; c < cands_.size(); ++c) {
    const double mag = std::fabs(cands_[c].rate);
    const double r = std::max(cands_[c].slack, 0.0) / mag;
    if (r > bound) continue;
    if (mag > best_rate) {
      best_rate = mag;
      chosen = static_cast<int>(c);
    }
  }
  const Candidate& c = cands_[chosen];
  const double step = std::max(c.slack, 0.0) / std::fabs(c.rate);
  if (std::isfinite(range) && range <= step) {
    out.step = range;
    return out;
  }
  out.row = c.row;
  out.step = step;
  out.bound = c.bound;
  return out;
}

void Simplex::Apply(const Entering& e, const Leaving& l) {
  const int q = e.col;
  const int k = nonbasic_[q];
  const double delta = e.dir * l.step;
  if (delta != 0.0) {
    val_[k] += delta;
    for (int i = 0; i < m_; ++i) {
      const double a = Row(i)[q];
      if (a != 0.0) val_[basis_[i]] += a * delta;
    }
  }
  if (l.row < 0) {
    val_[k] = e.dir > 0.0 ? up_[k] : lo_[k];
    return;
  }
  const int leaving = basis_[l.row];
  Pivot(l.row, q);
  val_[leaving] = l.bound;
}

void Simplex::Pivot(int p, int q) {
  double* rp = Row(p);
  const double inv = 1.0 / rp[q];
  for (int j = 0; j < n_; ++j) rp[j] *= -inv;
  rp[q] = inv;
  const std::size_t n = static_cast<std::size_t>(n_);
  for (int i = 0; i < m_; ++i) {
    if (i == p) continue;
    double* ri = Row(i);
    const double f = ri[q];
    if (f == 0.0) continue;
    ri[q] = 0.0;
    k_.axpy(f, rp, ri, n);
  }
  const double f = d_[q];
  if (f != 0.0) {
    d_[q] = 0.0;
    k_.axpy(f, rp, d_.data(), n);
  }
  std::swap(basis_[p], nonbasic_[q]);
}

LpStatus Simplex::Iterate(Phase phase) {
  if (phase == Phase::kTwo) PhaseTwoCosts();
  bool verified = false;
  degenerate_run_ = 0;
  while (true) {
    if (phase == Phase::kOne && !PhaseOneCosts()) return LpStatus::kOptimal;
    const Entering e = Price();
    if (e.col < 0) {
      if (phase == Phase::kOne) return LpStatus::kInfeasible;
      // Recompute the reduced costs from scratch before declaring optimality.
      if (verified) return LpStatus::kOptimal;
      PhaseTwoCosts();
      verified = true;
      continue;
    }
    verified = false;
    if (++iterations_ > max_iterations_) {
      throw SolverError("simplex iteration limit reached (" +
                        std::to_string(max_iterations_) + ")");
    }
    const Leaving l = Ratio(e, phase);
    if (l.unbounded) return LpStatus::kUnbounded;
    Apply(e, l);
    if (l.step <= 1e-12) {
      if (++degenerate_run_ > 20 && !perturbed_) {
        Perturb();
        degenerate_run_ = 0;
      }
    } else {
      degenerate_run_ = 0;
    }
    if (iterations_ % 100 == 0) {
      RefreshBasics();
      if (phase == Phase::kTwo) PhaseTwoCosts();
    }
  }
}

LpResult Simplex::Run() {
  LpResult result;
  LpStatus status = LpStatus::kOptimal;
  for (int round = 0; round < 6; ++round) {
    status = Iterate(Phase::kOne);
    if (status == LpStatus::kInfeasible && !perturbed_) break;
    if (status == LpStatus::kOptimal) status = Iterate(Phase::kTwo);
    if (perturbed_) {
      Unperturb();
      continue;
    }
    if (status != LpStatus::kOptimal) break;
    RefreshBasics();
    double unused;
    bool clean = true;
    for (int i = 0; i < m_ && clean; ++i) clean = !BasicInfeasible(i, &unused);
    if (clean) break;
  }
  result.status = status;
  result.iterations = iterations_;
  if (status != LpStatus::kOptimal) return result;
  result.x.assign(val_.begin(), val_.begin() + n_);
  for (int j = 0; j < n_; ++j) {
    result.x[j] = std::clamp(result.x[j], lo_[j], up_[j]);
  }
  double obj = 0.0;
  for (int j = 0; j < n_; ++j) obj += prob_.cost(j) * result.x[j];
  result.objective = obj;
  return result;
}

std::mutex& DumpMutex() {
  static std::mutex mu;
  return mu;
}

std::string& DumpPath() {
  static std::string path;
  return path;
}

// Largest scaled violation of the original rows by x.
double Residual(const LpProblem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (const LpConstraint& c : p.constraints()) {
    double lhs = 0.0;
    double scale = std::fabs(c.rhs);
    for (const Term& t : c.terms) {
      lhs += t.coef * x[t.var];
      scale = std::max(scale, std::fabs(t.coef * x[t.var]));
    }
    double v = 0.0;
    if (c.relation != Relation::kGreaterEqual) v = std::max(v, lhs - c.rhs);
    if (c.relation != Relation::kLessEqual) v = std::max(v, c.rhs - lhs);
    worst = std::max(worst, v / (1.0 + scale));
  }
  return worst;
}

}  // namespace

LpResult solve_lp(const LpProblem& problem, const SimplexOptions& options) {
  problem.Check();
  Simplex simplex(problem, options);
  LpResult result = simplex.Run();
  {
    std::lock_guard<std::mutex> lock(DumpMutex());
    if (!DumpPath().empty()) {
      std::ofstream out(DumpPath(), std::ios::app);
      out.precision(17);
      out << ToLpFormat(problem) << "\\ status " << ToString(result.status)
          << " objective " << result.objective << "\n\n";
    }
  }
  if (result.status == LpStatus::kOptimal) {
    const double r = Residual(problem, result.x);
    if (r > 1e-7) {
      throw SolverError("simplex solution violates constraints by " +
                        std::to_string(r));
    }
  }
  return result;
}

void SetLpDumpPath(const std::string& path) {
  std::lock_guard<std::mutex> lock(DumpMutex());
  DumpPath() = path;
}

namespace {

std::string VarName(const LpProblem& p, int j) {
  if (!p.name(j).empty()) return p.name(j);
  return "x" + std::to_string(j);
}

void WriteNumber(std::ostringstream& os, double v) {
  os.precision(17);
  os << v;
}

void WriteTerms(std::ostringstream& os, const LpProblem& p,
                const std::vector<Term>& terms) {
  if (terms.empty()) {
    os << " 0 " << VarName(p, 0);
    return;
  }
  for (const Term& t : terms) {
    os << (t.coef < 0 ? " - " : " + ");
    WriteNumber(os, std::fabs(t.coef));
    os << " " << VarName(p, t.var);
  }
}

}  // namespace

std::string ToLpFormat(const LpProblem& p) {
  std::ostringstream os;
  os << "\\ " << p.num_variables() << " variables, " << p.num_constraints()
     << " constraints\n";
  os << (p.sense() == Sense::kMinimize ? "Minimize\n" : "Maximize\n");
  os << " obj:";
  std::vector<Term> obj;
  for (int j = 0; j < p.num_variables(); ++j) {
    if (p.cost(j) != 0.0) obj.push_back({j, p.cost(j)});
  }
  if (obj.empty() && p.num_variables() > 0) obj.push_back({0, 0.0});
  WriteTerms(os, p, obj);
  os << "\nSubject To\n";
  for (int i = 0; i < p.num_constraints(); ++i) {
    const LpConstraint& c = p.constraints()[i];
    os << " " << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ":";
    WriteTerms(os, p, c.terms);
    os << (c.relation == Relation::kLessEqual
               ? " <= "
               : c.relation == Relation::kEqual ? " = " : " >= ");
    WriteNumber(os, c.rhs);
    os << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < p.num_variables(); ++j) {
    const double lo = p.lower(j);
    const double up = p.upper(j);
    os << " ";
    if (lo == -kInfinity && up == kInfinity) {
      os << VarName(p, j) << " free\n";
      continue;
    }
    if (lo == -kInfinity) {
      os << "-inf";
    } else {
      WriteNumber(os, lo);
    }
    os << " <= " << VarName(p, j) << " <= ";
    if (up == kInfinity) {
      os << "+inf";
    } else {
      WriteNumber(os, up);
    }
    os << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace prorcf
