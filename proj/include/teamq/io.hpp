// Copyright 2026 The teamq Authors.
//
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

#ifndef TEAMQ_IO_HPP_
#define TEAMQ_IO_HPP_

// JSON encodings of instances, strategies and audit reports.
//
// Rationals are written as "p/q" strings (integers as "p"). Floats are JSON
// numbers in shortest round-trip form, so save/load is lossless in both
// modes.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "teamq/quantum.hpp"
#include "teamq/team_core.hpp"
#include "teamq/verification.hpp"

namespace teamq {

using Json = nlohmann::json;

// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"M": [[..],[..]], "N": [[..],[..]], "prior": {"xiA,xiB,xiW": ...},
//  "chi": ..., "labels": {"A": [..], "B": [..]}}. Prior entries and chi are
// "p/q" strings or numbers; any float prior entry selects float mode.
Json instance_to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(const Json& json);

// {"dim": 2, "rho": [[re, im] x 16], "projectors": {"A": {"xi0": {"u0": ...,
//  "u1": ...}, "xi1": {...}}, "B": {...}}}, each 2x2 matrix as four
// row-major [re, im] pairs.
Json strategy_to_json(const QuantumStrategy& strategy);
QuantumStrategy strategy_from_json(const Json& json);

Json counterexample_to_json(const Counterexample& counterexample);
Json check_to_json(const CheckResult& check);

Json report_to_json(const AuditReport& report);
AuditReport report_from_json(const Json& json);

// One row per verdict, then the global checks and any failures.
std::string summary_table(const AuditReport& report);

// Throws InputError when the file cannot be opened or parsed.
Json read_json_file(const std::filesystem::path& path);

}  // namespace teamq

#endif  // TEAMQ_IO_HPP_
