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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "prorcf/accept.hpp"
#include "prorcf/core.hpp"
#include "prorcf/dmsim.hpp"
#include "prorcf/io.hpp"
#include "prorcf/lp.hpp"
#include "prorcf/oracle.hpp"
#include "prorcf/pro.hpp"
#include "prorcf/rcf.hpp"
#include "prorcf/value.hpp"

namespace prorcf::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string instance;
  std::string decomposition;
  std::string prospect;
  std::string model;
  std::string out;
  std::string lp_dump;
  std::string experiment = "portfolio";
  std::string returns;
  std::optional<double> level;
  double grid_step = 0.01;
  bool law = false;
  bool level_search = false;
  std::uint64_t seed = 1;
  std::size_t pairs = 20;
  std::size_t scenarios = 10;
  std::size_t attributes = 3;
  std::size_t assets = 10;
  std::size_t test_prospects = 50;
};

void Emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

ValidatedInstance LoadInstance(const Options& o) {
  Instance inst = read_instance_json(o.instance);
  if (o.law) inst.law_invariant = true;
  return validate_instance(inst);
}

Decomposition LoadDecomposition(const Options& o, const ValidatedInstance& inst) {
  Decomposition d = read_decomposition_json(o.decomposition);
  d.CheckAgainst(inst);
  return d;
}

std::string FormatNumber(double v) { return json(v).dump(); }

int CmdValidate(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedInstance inst = LoadInstance(o);
  json j;
  j["valid"] = true;
  j["members"] = inst.size();
  j["edges"] = inst.edges().size();
  j["scenarios"] = inst.scenarios();
  j["attributes"] = inst.attributes();
  j["lipschitz"] = inst.lipschitz();
  j["law_invariant"] = inst.law_invariant();
  err << "prorcf: instance valid with " << inst.size() << " distinct prospects\n";
  out << j.dump(2) << "\n";
  return kExitOk;
}

int CmdValue(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedInstance inst = LoadInstance(o);
  const Decomposition d = solve_value_problem(inst);
  err << "prorcf: sorted " << d.size() << " prospects with " << d.lp_calls()
      << " LP solves\n";
  Emit(o, out, decomposition_to_json(d));
  return kExitOk;
}

int CmdOracle(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedInstance inst = LoadInstance(o);
  const OracleResult r = inst.law_invariant() ? oracle_value_problem_law(inst)
                                              : oracle_value_problem(inst);
  std::vector<std::size_t> ids(inst.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
  std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    return r.values[a] > r.values[b];
  });
  std::vector<DecompositionEntry> entries;
  for (std::size_t id : ids) entries.push_back({id, r.values[id]});
  err << "prorcf: enumeration used " << r.lp_calls << " LP solves\n";
  Emit(o, out, decomposition_to_json(Decomposition(inst.law_invariant(), entries, r.lp_calls)));
  return kExitOk;
}

int CmdEval(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedInstance inst = LoadInstance(o);
  const Decomposition d = LoadDecomposition(o, inst);
  const Prospect x = read_prospect_csv(o.prospect);
  const RcfEvaluation r = o.level_search
                              ? eval_rcf_levelsearch_detailed(x, d, inst)
                              : (d.law_invariant() ? eval_rcf_law_detailed(x, d, inst)
                                                   : eval_rcf_detailed(x, d, inst));
  err << "prorcf: value fixed by level " << r.level << " after " << r.lp_calls
      << " LP solves\n";
  Emit(o, out, FormatNumber(r.value) + "\n");
  return kExitOk;
}

int CmdAccept(const Options& o, std::ostream& out, std::ostream&) {
  const ValidatedInstance inst = LoadInstance(o);
  const Decomposition d = LoadDecomposition(o, inst);
  const Prospect x = read_prospect_csv(o.prospect);
  const double v = *o.level;
  const bool in = d.law_invariant() ? membership_law(x, v, d, inst) : membership(x, v, d, inst);
  json j;
  j["result"] = in ? "in" : "out";
  j["level"] = v;
  j["kappa"] = kappa(v, d);
  Emit(o, out, j.dump(2) + "\n");
  return kExitOk;
}

int CmdAspiration(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedInstance inst = LoadInstance(o);
  const Decomposition d = LoadDecomposition(o, inst);
  if (!(o.grid_step > 0.0)) throw ValidationError("--grid-step must be positive");
  const double lowest = o.level ? *o.level : d.level(d.size()) - inst.lipschitz();
  const AspirationalDecomposition asp(d, inst);
  std::optional<Prospect> x;
  if (!o.prospect.empty()) x = read_prospect_csv(o.prospect);
  std::ostringstream csv;
  csv.precision(12);
  csv << "v,kappa,c,tau" << (x ? ",risk,accepted" : "") << "\n";
  for (double v : level_grid(lowest, o.grid_step)) {
    const std::size_t j = kappa(v, d);
    csv << v << ',' << j << ',' << asp.c(j) << ',' << asp.tau(v);
    if (x) {
      const double risk = asp.risk_at(v, *x);
      csv << ',' << risk << ',' << (risk <= 1e-9 ? 1 : 0);
    }
    csv << "\n";
  }
  if (x) {
    const double value = eval_rcf_via_aspiration(*x, d, inst, level_grid(lowest, o.grid_step));
    err << "prorcf: aspirational value " << value << "\n";
  }
  Emit(o, out, csv.str());
  return kExitOk;
}

int CmdPro(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidatedInstance inst = LoadInstance(o);
  const Decomposition d = LoadDecomposition(o, inst);
  const DecisionModel m = read_model_json(o.model);
  validate_model(m);
  RobustSolution s;
  if (d.law_invariant()) {
    s = o.level_search ? solve_pro_law_levelsearch(m, d, inst) : solve_pro_law(m, d, inst);
  } else {
    s = o.level_search ? solve_pro_levelsearch(m, d, inst) : solve_pro(m, d, inst);
  }
  err << "prorcf: robust value " << s.value << " at level " << s.level_index << " after "
      << s.lp_calls << " LP solves\n";
  Emit(o, out, robust_solution_to_json(s));
  return kExitOk;
}

// Synthetic single-attribute asset returns, one column per asset.
std::vector<Prospect> SyntheticAssets(std::size_t M, std::size_t T, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<Prospect> assets;
  for (std::size_t m = 0; m < M; ++m) {
    const double mean = 0.5 * static_cast<double>(m + 1);
    const double sd = 1.0 * static_cast<double>(m + 1);
    std::vector<double> col(T);
    for (double& c : col) c = mean + sd * z(rng);
    assets.push_back(Prospect::Column(std::move(col)));
  }
  return assets;
}

struct Experiment {
  std::vector<Prospect> pool;
  DecisionModel model;
  CeDm dm;
  std::function<std::vector<double>(const std::vector<double>&)> project;
  std::vector<Prospect> tests;
};

std::vector<double> RandomFeasible(const Experiment& ex, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> z(ex.model.num_vars);
  for (double& c : z) c = e(rng);
  return ex.project(z);
}

Experiment BuildExperiment(const Options& o) {
  Experiment ex;
  if (o.experiment == "portfolio") {
    const PortfolioData data = o.returns.empty()
                                   ? portfolio_from_assets(SyntheticAssets(o.assets, o.scenarios, o.seed))
                                   : load_returns_csv(o.returns);
    ex.pool = data.assets;
    ex.model = data.model;
    ex.dm = CeDm{{1.0}, 0.05};
    ex.project = project_simplex;
  } else if (o.experiment == "capital") {
    CapitalExperiment cap = gen_capital_instance(o.attributes, o.scenarios, o.seed);
    ex.pool = cap.pool;
    ex.model = cap.model;
    ex.dm = o.attributes == 9 ? SampleNineAttributeDm()
                              : CeDm{std::vector<double>(o.attributes, 1.0 / static_cast<double>(o.attributes)), 0.05};
    const std::size_t block = o.attributes;
    const double budget = cap.budget;
    ex.project = [block, budget](const std::vector<double>& z) {
      return project_capped_blocks(z, block, budget);
    };
  } else {
    throw ValidationError("--experiment must be portfolio or capital");
  }
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < o.test_prospects; ++k) {
    ex.tests.push_back(ex.model.Reward(RandomFeasible(ex, rng)));
  }
  return ex;
}

std::vector<std::size_t> TrendSizes(std::size_t K) {
  std::vector<std::size_t> sizes;
  for (std::size_t s : {1, 2, 5, 10, 20}) {
    if (s <= K) sizes.push_back(s);
  }
  if (sizes.empty() || sizes.back() != K) sizes.push_back(K);
  return sizes;
}

std::vector<double> MinMax(const std::vector<double>& xs) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) out.push_back(*hi > *lo ? (x - *lo) / (*hi - *lo) : 1.0);
  return out;
}

int CmdSimulate(const Options& o, std::ostream& out, std::ostream& err) {
  const Experiment ex = BuildExperiment(o);
  const std::vector<std::size_t> sizes = TrendSizes(o.pairs);
  std::vector<bool> modes{false};
  if (o.law) modes.push_back(true);

  std::vector<std::vector<double>> averages(modes.size());
  std::vector<ValidatedInstance> largest;
  std::vector<Decomposition> largest_d;
  for (std::size_t mi = 0; mi < modes.size(); ++mi) {
    const auto instances = nested_ecds(ex.pool, sizes, ex.dm, o.seed, 1.0, modes[mi]);
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      const ValidatedInstance inst = validate_instance(instances[si]);
      const Decomposition d = solve_value_problem(inst);
      double total = 0.0;
      for (const Prospect& x : ex.tests) total += evaluate(x, d, inst);
      averages[mi].push_back(total / static_cast<double>(ex.tests.size()));
      err << "prorcf: " << (modes[mi] ? "law" : "base") << " size " << sizes[si]
          << " average " << averages[mi].back() << "\n";
      if (si + 1 == sizes.size()) {
        largest.push_back(inst);
        largest_d.push_back(d);
      }
    }
  }

  std::ostringstream trend;
  trend.precision(12);
  trend << "ecds_size,avg_rcf_raw,avg_rcf_minmax" << (o.law ? ",avg_rcf_law_raw,avg_rcf_law_minmax" : "")
        << "\n";
  std::vector<std::vector<double>> normalized;
  for (const auto& a : averages) normalized.push_back(MinMax(a));
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    trend << sizes[si];
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
      trend << ',' << averages[mi][si] << ',' << normalized[mi][si];
    }
    trend << "\n";
  }

  std::ostringstream pro;
  pro.precision(12);
  pro << "method,rcf_value,ce_value,lp_calls\n";
  for (std::size_t mi = 0; mi < modes.size(); ++mi) {
    const RobustSolution s = modes[mi] ? solve_pro_law(ex.model, largest_d[mi], largest[mi])
                                       : solve_pro(ex.model, largest_d[mi], largest[mi]);
    pro << (modes[mi] ? "pro_law" : "pro") << ',' << s.value << ','
        << ce_value(ex.dm, ex.model.Reward(s.z_star)) << ',' << s.lp_calls << "\n";
  }
  const std::vector<double> zu = maximize_expected_utility(ex.model, ex.dm, ex.project);
  const Prospect gu = ex.model.Reward(zu);
  pro << "expected_utility," << evaluate(gu, largest_d[0], largest[0]) << ','
      << ce_value(ex.dm, gu) << ",0\n";

  if (o.out.empty()) {
    out << trend.str() << "\n" << pro.str();
  } else {
    std::filesystem::create_directories(o.out);
    write_text_file((std::filesystem::path(o.out) / "trend.csv").string(), trend.str());
    write_text_file((std::filesystem::path(o.out) / "pro.csv").string(), pro.str());
    err << "prorcf: wrote trend.csv and pro.csv to " << o.out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Robust choice functions from pairwise comparisons", "prorcf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--lp-dump", o.lp_dump, "Append every LP solved to this file in LP format");
  app.add_flag("--law", o.law, "Use the law-invariant pipeline");

  auto* validate = app.add_subcommand("validate", "Check an instance");
  auto* value = app.add_subcommand("value", "Sort the prospect set into a decomposition");
  auto* oracle = app.add_subcommand("oracle", "Solve the value problem by enumeration");
  auto* eval = app.add_subcommand("eval", "Evaluate the robust choice function at a prospect");
  auto* accept = app.add_subcommand("accept", "Test membership in an acceptance set");
  auto* aspiration = app.add_subcommand("aspiration", "Tabulate the aspirational representation");
  auto* pro = app.add_subcommand("pro", "Solve the preference robust decision problem");
  auto* simulate = app.add_subcommand("simulate", "Run a simulated decision-maker experiment");

  for (auto* sub : {validate, value, oracle, eval, accept, aspiration, pro}) {
    sub->add_option("--instance", o.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  }
  for (auto* sub : {value, oracle, eval, accept, aspiration, pro, simulate}) {
    sub->add_option("--out", o.out, "Write output to this path instead of stdout");
  }
  for (auto* sub : {eval, accept, aspiration, pro}) {
    sub->add_option("--decomposition", o.decomposition, "Decomposition JSON")
        ->required()
        ->check(CLI::ExistingFile);
  }
  for (auto* sub : {eval, accept}) {
    sub->add_option("--prospect", o.prospect, "Prospect CSV")->required()->check(CLI::ExistingFile);
  }
  aspiration->add_option("--prospect", o.prospect, "Prospect CSV for the risk column")
      ->check(CLI::ExistingFile);
  accept->add_option("--level", o.level, "Acceptance level v <= 0")->required();
  aspiration->add_option("--level", o.level, "Lowest grid level");
  aspiration->add_option("--grid-step", o.grid_step, "Grid spacing");
  eval->add_flag("--level-search", o.level_search, "Scan levels linearly");
  pro->add_flag("--level-search", o.level_search, "Scan levels linearly");
  pro->add_option("--model", o.model, "Decision model JSON")->required()->check(CLI::ExistingFile);

  simulate->add_option("--experiment", o.experiment, "portfolio or capital")
      ->check(CLI::IsMember({"portfolio", "capital"}));
  simulate->add_option("--pairs", o.pairs, "Largest ECDS size");
  simulate->add_option("--scenarios", o.scenarios, "Scenario count T");
  simulate->add_option("--attributes", o.attributes, "Attribute count N (capital)");
  simulate->add_option("--assets", o.assets, "Synthetic asset count (portfolio)");
  simulate->add_option("--test-prospects", o.test_prospects, "Test prospects per average");
  simulate->add_option("--returns", o.returns, "Asset return CSV (portfolio)")
      ->check(CLI::ExistingFile);
  simulate->add_option("--seed", o.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "prorcf: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (!o.lp_dump.empty()) SetLpDumpPath(o.lp_dump);
    int code = kExitUsage;
    if (*validate) code = CmdValidate(o, out, err);
    if (*value) code = CmdValue(o, out, err);
    if (*oracle) code = CmdOracle(o, out, err);
    if (*eval) code = CmdEval(o, out, err);
    if (*accept) code = CmdAccept(o, out, err);
    if (*aspiration) code = CmdAspiration(o, out, err);
    if (*pro) code = CmdPro(o, out, err);
    if (*simulate) code = CmdSimulate(o, out, err);
    SetLpDumpPath("");
    return code;
  } catch (const ValidationError& e) {
    err << "prorcf: invalid input: " << e.what() << "\n";
    SetLpDumpPath("");
    return kExitInvalid;
  } catch (const InfeasibleError& e) {
    err << "prorcf: infeasible: " << e.what() << "\n";
    SetLpDumpPath("");
    return kExitInvalid;
  } catch (const SolverError& e) {
    err << "prorcf: solver failure: " << e.what() << "\n";
    SetLpDumpPath("");
    return kExitSolver;
  } catch (const std::exception& e) {
    err << "prorcf: " << e.what() << "\n";
    SetLpDumpPath("");
    return kExitSolver;
  }
}

}  // namespace prorcf::cli
