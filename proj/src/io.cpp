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

#include "prorcf/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "prorcf/lp.hpp"

namespace prorcf {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::vector<std::vector<double>> parse_csv_matrix(const std::string& text,
                                                  const std::string& origin) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      const std::string trimmed =
          b == std::string::npos ? std::string() : cell.substr(b, e - b + 1);
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(trimmed, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (trimmed.empty() || used != trimmed.size() || !std::isfinite(v)) {
        throw ValidationError(origin + ":" + std::to_string(lineno) +
                              ": non-numeric entry '" + trimmed + "'");
      }
      row.push_back(v);
    }
    if (!line.empty() && line.back() == ',') {
      throw ValidationError(origin + ":" + std::to_string(lineno) + ": empty entry");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ValidationError(origin + ":" + std::to_string(lineno) + ": ragged row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError(origin + ": no data");
  return rows;
}

std::vector<std::vector<double>> read_csv_matrix(const std::string& path) {
  return parse_csv_matrix(read_text_file(path), path);
}

Prospect read_prospect_csv(const std::string& path) {
  const auto rows = read_csv_matrix(path);
  std::vector<double> values;
  for (const auto& r : rows) values.insert(values.end(), r.begin(), r.end());
  return Prospect(rows.size(), rows.front().size(), std::move(values));
}

std::string format_prospect_csv(const Prospect& x) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t t = 0; t < x.scenarios(); ++t) {
    for (std::size_t n = 0; n < x.attributes(); ++n) {
      if (n) out << ',';
      out << x(t, n);
    }
    out << '\n';
  }
  return out.str();
}

void write_prospect_csv(const std::string& path, const Prospect& x) {
  write_text_file(path, format_prospect_csv(x));
}

namespace {

json Parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError("malformed " + what + " JSON: " + e.what());
  }
}

template <typename T>
T Get(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw ValidationError(what + " JSON lacks \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(what + " JSON field \"" + key + "\": " + e.what());
  }
}

std::vector<std::vector<double>> Matrix(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return {};
  return Get<std::vector<std::vector<double>>>(j, key, "model");
}

std::vector<double> Vector(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return {};
  return Get<std::vector<double>>(j, key, "model");
}

}  // namespace

Instance read_instance_json(const std::string& path) {
  const json j = Parse(read_text_file(path), "instance");
  const fs::path base = fs::path(path).parent_path();
  auto load = [&](const std::string& rel) {
    fs::path p(rel);
    if (p.is_relative()) p = base / p;
    return read_prospect_csv(p.string());
  };
  Instance inst;
  inst.lipschitz = j.contains("lipschitz") ? Get<double>(j, "lipschitz", "instance") : 1.0;
  inst.law_invariant =
      j.contains("law_invariant") ? Get<bool>(j, "law_invariant", "instance") : false;
  inst.w0 = load(Get<std::string>(j, "w0", "instance"));
  if (j.contains("pairs")) {
    if (!j.at("pairs").is_array()) throw ValidationError("instance \"pairs\" must be an array");
    for (const json& p : j.at("pairs")) {
      inst.pairs.push_back({load(Get<std::string>(p, "preferred", "pair")),
                            load(Get<std::string>(p, "dominated", "pair"))});
    }
  }
  return inst;
}

void write_instance_json(const std::string& path, const Instance& inst) {
  const fs::path target(path);
  const fs::path dir = target.parent_path();
  const std::string stem = target.stem().string();
  auto put = [&](const Prospect& x, const std::string& tag) {
    const std::string name = stem + "_" + tag + ".csv";
    write_prospect_csv((dir / name).string(), x);
    return name;
  };
  json j;
  j["lipschitz"] = inst.lipschitz;
  j["law_invariant"] = inst.law_invariant;
  j["w0"] = put(inst.w0, "w0");
  j["pairs"] = json::array();
  for (std::size_t k = 0; k < inst.pairs.size(); ++k) {
    j["pairs"].push_back({{"preferred", put(inst.pairs[k].preferred, "w" + std::to_string(k + 1))},
                          {"dominated", put(inst.pairs[k].dominated, "y" + std::to_string(k + 1))}});
  }
  write_text_file(path, j.dump(2) + "\n");
}

std::string decomposition_to_json(const Decomposition& d) {
  json j;
  j["law_invariant"] = d.law_invariant();
  j["lp_calls"] = d.lp_calls();
  j["entries"] = json::array();
  for (const auto& e : d.entries()) {
    j["entries"].push_back({{"prospect", e.prospect}, {"value", e.value}});
  }
  return j.dump(2) + "\n";
}

Decomposition decomposition_from_json(const std::string& text) {
  const json j = Parse(text, "decomposition");
  std::vector<DecompositionEntry> entries;
  for (const json& e : Get<json>(j, "entries", "decomposition")) {
    entries.push_back({Get<std::size_t>(e, "prospect", "decomposition entry"),
                       Get<double>(e, "value", "decomposition entry")});
  }
  const bool law =
      j.contains("law_invariant") ? Get<bool>(j, "law_invariant", "decomposition") : false;
  const long calls = j.contains("lp_calls") ? Get<long>(j, "lp_calls", "decomposition") : 0;
  return Decomposition(law, std::move(entries), calls);
}

Decomposition read_decomposition_json(const std::string& path) {
  return decomposition_from_json(read_text_file(path));
}

DecisionModel model_from_json(const std::string& text) {
  const json j = Parse(text, "model");
  DecisionModel m;
  m.A = Matrix(j, "A");
  m.b = Vector(j, "b");
  m.Aeq = Matrix(j, "Aeq");
  m.beq = Vector(j, "beq");
  const json G = Get<json>(j, "G", "model");
  m.g = Matrix(G, "g");
  m.h = Vector(G, "h");
  if (m.g.empty()) throw ValidationError("model JSON needs a nonempty G.g");
  m.num_vars = m.g.front().size();
  m.attributes = G.contains("attributes") ? Get<std::size_t>(G, "attributes", "model") : 1;
  m.scenarios = G.contains("scenarios") ? Get<std::size_t>(G, "scenarios", "model")
                                        : (m.attributes ? m.g.size() / m.attributes : 0);
  if (m.h.empty()) m.h.assign(m.g.size(), 0.0);
  m.lower.assign(m.num_vars, -kInfinity);
  m.upper.assign(m.num_vars, kInfinity);
  if (j.contains("bounds") && !j.at("bounds").is_null()) {
    const json& bounds = j.at("bounds");
    if (!bounds.is_array() || bounds.size() != m.num_vars) {
      throw ValidationError("model \"bounds\" must list one [lo, up] pair per variable");
    }
    for (std::size_t k = 0; k < m.num_vars; ++k) {
      const json& pair = bounds[k];
      if (!pair.is_array() || pair.size() != 2) {
        throw ValidationError("model bound entries must be [lo, up]");
      }
      if (!pair[0].is_null()) m.lower[k] = pair[0].get<double>();
      if (!pair[1].is_null()) m.upper[k] = pair[1].get<double>();
    }
  }
  return m;
}

DecisionModel read_model_json(const std::string& path) {
  return model_from_json(read_text_file(path));
}

std::string model_to_json(const DecisionModel& m) {
  json j;
  j["A"] = m.A;
  j["b"] = m.b;
  j["Aeq"] = m.Aeq;
  j["beq"] = m.beq;
  json bounds = json::array();
  for (std::size_t k = 0; k < m.num_vars; ++k) {
    json lo = std::isinf(m.lower[k]) ? json(nullptr) : json(m.lower[k]);
    json up = std::isinf(m.upper[k]) ? json(nullptr) : json(m.upper[k]);
    bounds.push_back({lo, up});
  }
  j["bounds"] = bounds;
  j["G"] = {{"scenarios", m.scenarios}, {"attributes", m.attributes}, {"g", m.g}, {"h", m.h}};
  return j.dump(2) + "\n";
}

std::string robust_solution_to_json(const RobustSolution& s) {
  json j;
  j["z_star"] = s.z_star;
  j["value"] = s.value;
  j["level_index"] = s.level_index;
  j["lp_calls"] = s.lp_calls;
  return j.dump(2) + "\n";
}

}  // namespace prorcf
