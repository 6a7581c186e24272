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

#include "teamq/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "teamq/superstructure.hpp"

namespace teamq {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const Json& member(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return json.at(key);
}

std::string prior_key(int a, int b, int w) {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(w);
}

Json matrix_to_json(const CostMatrix& m) {
  return Json::array({Json::array({m[0][0], m[0][1]}),
                      Json::array({m[1][0], m[1][1]})});
}

CostMatrix matrix_from_json(const Json& json, const char* name) {
  if (!json.is_array() || json.size() != 2) {
    fail(std::string(name) + " must be a 2x2 array");
  }
  CostMatrix m{};
  for (std::size_t i = 0; i < 2; ++i) {
    if (!json[i].is_array() || json[i].size() != 2) {
      fail(std::string(name) + " must be a 2x2 array");
    }
    for (std::size_t j = 0; j < 2; ++j) {
      if (!json[i][j].is_number_integer()) {
        fail(std::string(name) + " entries must be integers");
      }
      m[i][j] = json[i][j].get<int>();
    }
  }
  return m;
}

// A rational-valued field: "p/q" or decimal string (exact), integer (exact),
// or float (the exact value of the double). Sets `is_float` for floats.
Rational scalar_from_json(const Json& json, const std::string& what,
                          bool& is_float) {
  try {
    if (json.is_string()) return parse_rational(json.get<std::string>());
    if (json.is_number_integer()) return Rational(json.get<long>());
    if (json.is_number_float()) {
      is_float = true;
      double v = json.get<double>();
      if (!std::isfinite(v)) fail(what + " is not finite");
      return rational_from_double(v);
    }
  } catch (const std::invalid_argument& e) {
    fail(what + ": " + e.what());
  }
  fail(what + " must be a fraction string or a number");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& json) {
  if (!json.is_array() || json.size() != 2 || !json[0].is_number() ||
      !json[1].is_number()) {
    fail("complex entries must be [re, im] pairs");
  }
  return {json[0].get<double>(), json[1].get<double>()};
}

template <std::size_t N>
Json matrix_entries_to_json(const SquareMatrix<N>& m) {
  Json out = Json::array();
  for (const Complex& z : m.data()) out.push_back(complex_to_json(z));
  return out;
}

template <std::size_t N>
SquareMatrix<N> matrix_entries_from_json(const Json& json, const char* what) {
  if (!json.is_array() || json.size() != N * N) {
    fail(std::string(what) + " must list " + std::to_string(N * N) +
         " row-major entries");
  }
  SquareMatrix<N> m;
  for (std::size_t k = 0; k < N * N; ++k) {
    m(k / N, k % N) = complex_from_json(json[k]);
  }
  return m;
}

Json family_to_json(const std::array<std::array<Matrix2c, 2>, 2>& family) {
  Json out = Json::object();
  for (int xi = 0; xi < 2; ++xi) {
    for (int u = 0; u < 2; ++u) {
      out["xi" + std::to_string(xi)]["u" + std::to_string(u)] =
          matrix_entries_to_json(family[xi][u]);
    }
  }
  return out;
}

std::array<std::array<Matrix2c, 2>, 2> family_from_json(const Json& json) {
  std::array<std::array<Matrix2c, 2>, 2> family;
  for (int xi = 0; xi < 2; ++xi) {
    const std::string xk = "xi" + std::to_string(xi);
    const Json& row = member(json, xk.c_str());
    for (int u = 0; u < 2; ++u) {
      const std::string uk = "u" + std::to_string(u);
      family[xi][u] = matrix_entries_from_json<2>(member(row, uk.c_str()),
                                                  "projector");
    }
  }
  return family;
}

Json rational_array(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

CheckResult check_from_json(const Json& json) {
  CheckResult check;
  check.name = member(json, "name").get<std::string>();
  check.pass = member(json, "pass").get<bool>();
  check.cases = member(json, "cases").get<std::size_t>();
  if (json.contains("counterexample") && !json.at("counterexample").is_null()) {
    const Json& c = json.at("counterexample");
    Counterexample ce;
    if (c.contains("instance") && !c.at("instance").is_null()) {
      ce.instance = instance_from_json(c.at("instance"));
    }
    ce.label = c.value("label", "");
    ce.detail = c.value("detail", "");
    check.counterexample = std::move(ce);
  }
  return check;
}

}  // namespace

Json instance_to_json(const ProblemInstance& instance) {
  Json out;
  out["M"] = matrix_to_json(instance.cost_pair().m());
  out["N"] = matrix_to_json(instance.cost_pair().n());
  Json prior = Json::object();
  const bool exact = instance.prior().is_exact();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int w = 0; w < 2; ++w) {
        const Rational& mass = instance.prior()(a, b, w);
        prior[prior_key(a, b, w)] =
            exact ? Json(to_string(mass)) : Json(to_double(mass));
      }
    }
  }
  out["prior"] = std::move(prior);
  out["chi"] = to_string(instance.chi());
  const ActionLabels& labels = instance.labels();
  if (!(labels == ActionLabels{})) {
    out["labels"] = {{"A", labels.a}, {"B", labels.b}};
  }
  return out;
}

ProblemInstance instance_from_json(const Json& json) {
  if (!json.is_object()) fail("instance must be a JSON object");
  try {
    BinaryCostPair pair(matrix_from_json(member(json, "M"), "M"),
                        matrix_from_json(member(json, "N"), "N"));
    const Json& prior = member(json, "prior");
    if (!prior.is_object() || prior.size() != 8) {
      fail("prior must have exactly 8 entries keyed \"xiA,xiB,xiW\"");
    }
    std::array<Rational, 8> masses;
    bool any_float = false;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int w = 0; w < 2; ++w) {
          const std::string key = prior_key(a, b, w);
          masses[JointPrior::index(a, b, w)] = scalar_from_json(
              member(prior, key.c_str()), "prior[" + key + "]", any_float);
        }
      }
    }
    bool chi_float = false;
    Rational chi = scalar_from_json(member(json, "chi"), "chi", chi_float);
    ActionLabels labels;
    if (json.contains("labels")) {
      const Json& l = json.at("labels");
      labels.a = member(l, "A").get<std::array<std::string, 2>>();
      labels.b = member(l, "B").get<std::array<std::string, 2>>();
    }
    return ProblemInstance(pair, JointPrior::from_rationals(masses, !any_float),
                           chi, labels);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string("invalid instance: ") + e.what());
  }
}

Json strategy_to_json(const QuantumStrategy& strategy) {
  Json out;
  out["dim"] = 2;
  out["rho"] = matrix_entries_to_json(strategy.rho);
  out["projectors"] = {{"A", family_to_json(strategy.proj_a)},
                       {"B", family_to_json(strategy.proj_b)}};
  return out;
}

QuantumStrategy strategy_from_json(const Json& json) {
  if (!json.is_object()) fail("strategy must be a JSON object");
  try {
    const Json& dim = member(json, "dim");
    if (!dim.is_number_integer() || dim.get<int>() != 2) {
      fail("only local dimension 2 is supported");
    }
    QuantumStrategy s;
    s.rho = matrix_entries_from_json<4>(member(json, "rho"), "rho");
    const Json& projectors = member(json, "projectors");
    s.proj_a = family_from_json(member(projectors, "A"));
    s.proj_b = family_from_json(member(projectors, "B"));
    return s;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string("invalid strategy: ") + e.what());
  }
}

Json counterexample_to_json(const Counterexample& counterexample) {
  Json out;
  out["instance"] = counterexample.instance
                        ? instance_to_json(*counterexample.instance)
                        : Json(nullptr);
  out["label"] = counterexample.label;
  out["detail"] = counterexample.detail;
  return out;
}

Json check_to_json(const CheckResult& check) {
  Json out;
  out["name"] = check.name;
  out["pass"] = check.pass;
  out["cases"] = check.cases;
  if (check.counterexample) {
    out["counterexample"] = counterexample_to_json(*check.counterexample);
  }
  return out;
}

Json report_to_json(const AuditReport& report) {
  Json out;
  out["seed"] = report.seed;
  out["samples_per_class"] = report.samples_per_class;
  out["chi_grid"] = rational_array(report.chi_grid);
  out["passed"] = report.passed();
  Json global = Json::array();
  for (const auto& c : report.global_checks) global.push_back(check_to_json(c));
  out["global_checks"] = std::move(global);
  Json classes = Json::array();
  for (const auto& audit : report.classes) {
    const auto& r = audit.record;
    Json row;
    row["code"] = r.pair.code();
    row["M"] = matrix_to_json(r.pair.m());
    row["N"] = matrix_to_json(r.pair.n());
    row["m"] = r.mn.m;
    row["n"] = r.mn.n;
    row["cell"] = std::string(to_string(r.cell));
    row["orbit_representative"] = r.orbit_rep.code();
    row["verdict"] = std::string(to_string(r.verdict));
    row["quantum_gap"] = audit.quantum_gap ? Json(*audit.quantum_gap) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& c : audit.checks) checks.push_back(check_to_json(c));
    row["checks"] = std::move(checks);
    classes.push_back(std::move(row));
  }
  out["classes"] = std::move(classes);
  return out;
}

AuditReport report_from_json(const Json& json) {
  if (!json.is_object()) fail("report must be a JSON object");
  try {
    AuditReport report;
    report.seed = member(json, "seed").get<std::uint64_t>();
    report.samples_per_class = member(json, "samples_per_class").get<int>();
    for (const auto& chi : member(json, "chi_grid")) {
      report.chi_grid.push_back(parse_rational(chi.get<std::string>()));
    }
    for (const auto& c : member(json, "global_checks")) {
      report.global_checks.push_back(check_from_json(c));
    }
    for (const auto& row : member(json, "classes")) {
      const unsigned code = member(row, "code").get<unsigned>();
      ClassAudit audit;
      audit.record = classify(BinaryCostPair::from_code(code));
      const auto verdict = parse_verdict(member(row, "verdict").get<std::string>());
      if (verdict != audit.record.verdict) {
        fail("class " + std::to_string(code) + " has a stale verdict");
      }
      if (row.contains("quantum_gap") && !row.at("quantum_gap").is_null()) {
        audit.quantum_gap = row.at("quantum_gap").get<double>();
      }
      for (const auto& c : member(row, "checks")) {
        audit.checks.push_back(check_from_json(c));
      }
      report.classes.push_back(std::move(audit));
    }
    return report;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string("invalid report: ") + e.what());
  }
}

std::string summary_table(const AuditReport& report) {
  struct Row {
    int classes = 0;
    int passed = 0;
    std::size_t cases = 0;
    std::optional<double> min_gap;
  };
  std::map<Verdict, Row> rows;
  for (const auto& audit : report.classes) {
    Row& row = rows[audit.record.verdict];
    ++row.classes;
    if (audit.passed()) ++row.passed;
    for (const auto& c : audit.checks) row.cases += c.cases;
    if (audit.quantum_gap) {
      row.min_gap = row.min_gap ? std::min(*row.min_gap, *audit.quantum_gap)
                                : *audit.quantum_gap;
    }
  }

  std::ostringstream out;
  out << "seed " << report.seed << ", " << report.samples_per_class
      << " samples per class, chi grid {";
  for (std::size_t k = 0; k < report.chi_grid.size(); ++k) {
    out << (k ? ", " : "") << to_string(report.chi_grid[k]);
  }
  out << "}\n\n";

  char line[160];
  std::snprintf(line, sizeof line, "%-28s %7s %7s %10s %12s\n", "verdict",
                "classes", "passed", "cases", "min gap");
  out << line;
  for (const auto& [verdict, row] : rows) {
    std::string gap = "-";
    if (row.min_gap) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", *row.min_gap);
      gap = buf;
    }
    std::snprintf(line, sizeof line, "%-28s %7d %7d %10zu %12s\n",
                  std::string(to_string(verdict)).c_str(), row.classes,
                  row.passed, row.cases, gap.c_str());
    out << line;
  }
  out << "\n";
  for (const auto& c : report.global_checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases
        << " cases)\n";
  }

  bool header = false;
  for (const auto& audit : report.classes) {
    for (const auto& c : audit.checks) {
      if (c.pass) continue;
      if (!header) {
        out << "\nfailures:\n";
        header = true;
      }
      out << "  class " << audit.record.pair.code() << " " << c.name;
      if (c.counterexample) {
        out << ": " << c.counterexample->detail;
        if (!c.counterexample->label.empty()) {
          out << " [" << c.counterexample->label << "]";
        }
      }
      out << "\n";
    }
  }
  out << "\n" << (report.passed() ? "audit PASSED" : "audit FAILED") << "\n";
  return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

}  // namespace teamq
