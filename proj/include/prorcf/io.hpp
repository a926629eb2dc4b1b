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

#ifndef PRORCF_IO_HPP_
#define PRORCF_IO_HPP_

#include <string>
#include <vector>

#include "prorcf/core.hpp"
#include "prorcf/pro.hpp"
#include "prorcf/value.hpp"

namespace prorcf {

// Numeric CSV without header. Rejects ragged rows, empty files and
// non-numeric or non-finite cells.
std::vector<std::vector<double>> read_csv_matrix(const std::string& path);
std::vector<std::vector<double>> parse_csv_matrix(const std::string& text,
                                                  const std::string& origin);

// T rows by N columns.
Prospect read_prospect_csv(const std::string& path);
std::string format_prospect_csv(const Prospect& x);
void write_prospect_csv(const std::string& path, const Prospect& x);

// {"lipschitz", "law_invariant", "w0": file, "pairs": [{"preferred",
// "dominated"}]} with prospect files resolved relative to the JSON file.
Instance read_instance_json(const std::string& path);
// Writes the instance JSON plus one CSV per prospect next to it.
void write_instance_json(const std::string& path, const Instance& inst);

std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);
Decomposition read_decomposition_json(const std::string& path);

// {"A", "b", "Aeq", "beq", "bounds": [[lo, up]] (null for unbounded),
//  "G": {"scenarios", "attributes", "g", "h"}}
DecisionModel model_from_json(const std::string& text);
DecisionModel read_model_json(const std::string& path);
std::string model_to_json(const DecisionModel& m);

std::string robust_solution_to_json(const RobustSolution& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace prorcf

#endif  // PRORCF_IO_HPP_
