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

// teamq: command-line front end.
//
//   teamq classify [--format csv|table]
//   teamq orbit --mask CODE
//   teamq solve INSTANCE.json [--strategy S.json] [--seesaw ...]
//   teamq witness [--output FILE]
//   teamq verify [--seed N] [--samples K] [--chi-grid "1/4,2,..."] [--report FILE]
//   teamq report AUDIT.json [--format table|json|csv]
//
// Exit status: 0 success, 1 failed verification, 2 malformed input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "teamq/io.hpp"
#include "teamq/polytopes.hpp"
#include "teamq/quantum.hpp"
#include "teamq/superstructure.hpp"
#include "teamq/verification.hpp"

namespace {

using teamq::Json;

constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw teamq::InputError("cannot write " + path);
  out << text;
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

Json matrix_json(const teamq::CostMatrix& m) {
  return Json::array({Json::array({m[0][0], m[0][1]}),
                      Json::array({m[1][0], m[1][1]})});
}

// ---- classify -------------------------------------------------------------

std::string classify_csv() {
  std::ostringstream out;
  out << "pair_bitmask,m,n,cell,orbit_representative,verdict\n";
  for (const auto& r : teamq::classify_all()) {
    out << r.pair.code() << ',' << r.mn.m << ',' << r.mn.n << ','
        << teamq::to_string(r.cell) << ',' << r.orbit_rep.code() << ','
        << teamq::to_string(r.verdict) << '\n';
  }
  return out.str();
}

std::string classify_table() {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%5s %-9s %-9s %2s %2s %-12s %4s %s\n",
                "code", "M", "N", "m", "n", "cell", "rep", "verdict");
  out << line;
  auto flat = [](const teamq::CostMatrix& m) {
    return std::to_string(m[0][0]) + "," + std::to_string(m[0][1]) + ";" +
           std::to_string(m[1][0]) + "," + std::to_string(m[1][1]);
  };
  for (const auto& r : teamq::classify_all()) {
    std::snprintf(line, sizeof line, "%5u %-9s %-9s %2d %2d %-12s %4u %s\n",
                  r.pair.code(), flat(r.pair.m()).c_str(),
                  flat(r.pair.n()).c_str(), r.mn.m, r.mn.n,
                  std::string(teamq::to_string(r.cell)).c_str(),
                  r.orbit_rep.code(),
                  std::string(teamq::to_string(r.verdict)).c_str());
    out << line;
  }
  return out.str();
}

// ---- orbit ----------------------------------------------------------------

Json orbit_json(unsigned code) {
  auto pair = teamq::BinaryCostPair::from_code(code);
  auto record = teamq::classify(pair);
  Json members = Json::array();
  for (const auto& member : teamq::orbit(pair)) {
    Json path = Json::array();
    for (auto action : teamq::action_path(pair, member)) {
      path.push_back(std::string(teamq::to_string(action)));
    }
    members.push_back({{"code", member.code()},
                       {"M", matrix_json(member.m())},
                       {"N", matrix_json(member.n())},
                       {"path", std::move(path)}});
  }
  return {{"pair", code},
          {"representative", record.orbit_rep.code()},
          {"cell", std::string(teamq::to_string(record.cell))},
          {"verdict", std::string(teamq::to_string(record.verdict))},
          {"size", members.size()},
          {"members", std::move(members)}};
}

// ---- solve ----------------------------------------------------------------

struct SolveConfig {
  std::string instance_path;
  std::string strategy_path;
  bool seesaw = false;
  int restarts = 32;
  int max_iters = 500;
  std::uint64_t seed = 0;
  bool include_strategy = false;
};

Json solve_json(const SolveConfig& config) {
  auto instance =
      teamq::instance_from_json(teamq::read_json_file(config.instance_path));
  auto local = teamq::local_optimum(instance);
  auto ns = teamq::ns_optimum(instance);
  auto central = teamq::centralized_optimum(instance);

  Json central_argmin = Json::object();
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      auto [ua, ub] = central.argmin[static_cast<std::size_t>(xa << 1 | xb)];
      central_argmin[std::to_string(xa) + "," + std::to_string(xb)] = {
          instance.labels().a[ua], instance.labels().b[ub]};
    }
  }

  Json out;
  out["instance"] = teamq::instance_to_json(instance);
  out["J_L"] = {{"value", teamq::to_string(local.value)},
                {"approx", teamq::to_double(local.value)},
                {"argmin", teamq::to_string(local.argmin)}};
  out["J_NS"] = {{"value", teamq::to_string(ns.value)},
                 {"approx", teamq::to_double(ns.value)},
                 {"argmin", std::visit([](const auto& l) { return teamq::to_string(l); },
                                       ns.argmin)}};
  out["J_central"] = {{"value", teamq::to_string(central.value)},
                      {"approx", teamq::to_double(central.value)},
                      {"argmin", std::move(central_argmin)}};
  out["gaps"] = {{"ns_below_local", ns.value < local.value},
                 {"central_below_local", central.value < local.value}};

  const double local_d = teamq::to_double(local.value);
  if (!config.strategy_path.empty()) {
    auto strategy =
        teamq::strategy_from_json(teamq::read_json_file(config.strategy_path));
    auto check = teamq::validate_strategy(strategy);
    Json q;
    q["valid"] = check.ok;
    if (!check.ok) {
      q["failure"] = check.failure;
    } else {
      double cost = teamq::quantum_cost(instance, strategy);
      q["cost"] = cost;
      q["below_local"] = cost < local_d;
      q["gap"] = local_d - cost;
    }
    out["quantum"] = std::move(q);
  }
  if (config.seesaw) {
    teamq::SeesawOptions options;
    options.restarts = config.restarts;
    options.max_iters = config.max_iters;
    options.seed = config.seed;
    auto result = teamq::seesaw_optimize(instance, options);
    Json s;
    s["value"] = result.value;
    s["converged"] = result.converged;
    s["best_restart"] = result.best_restart;
    s["iterations"] = result.iterations;
    s["below_local"] = result.value < local_d;
    s["gap"] = local_d - result.value;
    if (config.include_strategy) s["strategy"] = teamq::strategy_to_json(result.strategy);
    out["seesaw"] = std::move(s);
  }
  return out;
}

// ---- witness --------------------------------------------------------------

Json witness_json() {
  auto [instance, strategy] = teamq::half_cac_witness();
  auto check = teamq::validate_strategy(strategy);
  double cost = teamq::quantum_cost(instance, strategy);
  auto local = teamq::local_optimum(instance);
  Json out;
  out["instance"] = teamq::instance_to_json(instance);
  out["strategy"] = teamq::strategy_to_json(strategy);
  out["valid"] = check.ok;
  out["cost"] = cost;
  out["cost_closed_form"] = "(-7 - 3 sqrt(3)) / 10";
  out["cost_error"] = std::abs(cost - teamq::kHalfCacWitnessCost);
  out["J_L"] = teamq::to_string(local.value);
  out["gap"] = teamq::to_double(local.value) - cost;
  return out;
}

// ---- verify / report ------------------------------------------------------

std::vector<teamq::Rational> parse_chi_grid(const std::string& text) {
  std::vector<teamq::Rational> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      auto chi = teamq::parse_rational(item);
      if (chi < 0) throw std::invalid_argument("negative");
      grid.push_back(chi);
    } catch (const std::invalid_argument&) {
      throw teamq::InputError("bad chi grid entry \"" + item + "\"");
    }
  }
  if (grid.empty()) throw teamq::InputError("empty chi grid");
  return grid;
}

std::string report_csv(const teamq::AuditReport& report) {
  std::ostringstream out;
  out << "pair_bitmask,verdict,check,pass,cases,detail\n";
  for (const auto& audit : report.classes) {
    for (const auto& c : audit.checks) {
      out << audit.record.pair.code() << ','
          << teamq::to_string(audit.record.verdict) << ',' << c.name << ','
          << (c.pass ? "true" : "false") << ',' << c.cases << ','
          << (c.counterexample ? '"' + c.counterexample->detail + '"' : "")
          << '\n';
    }
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum advantage in binary two-agent team decision problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "teamq 0.1.0");

  std::string output;

  auto* classify = app.add_subcommand("classify", "Classify all 256 cost-pair classes");
  std::string classify_format = "csv";
  classify->add_option("--format", classify_format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();
  classify->add_option("-o,--output", output, "Output file (default stdout)");

  auto* orbit = app.add_subcommand("orbit", "List the orbit of one class");
  unsigned mask = 0;
  orbit->add_option("--mask", mask, "Pair code: mask(M) << 4 | mask(N), 0-255")
      ->required()
      ->check(CLI::Range(0u, 255u));
  orbit->add_option("-o,--output", output, "Output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Exact optima of one instance");
  SolveConfig solve_config;
  solve->add_option("instance", solve_config.instance_path, "Instance JSON file")
      ->required();
  solve->add_option("--strategy", solve_config.strategy_path,
                    "Quantum strategy JSON to evaluate on the instance");
  solve->add_flag("--seesaw", solve_config.seesaw, "Run the see-saw search");
  solve->add_option("--restarts", solve_config.restarts, "See-saw restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--max-iters", solve_config.max_iters, "See-saw sweeps per restart")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--seed", solve_config.seed, "See-saw seed")->capture_default_str();
  solve->add_flag("--emit-strategy", solve_config.include_strategy,
                  "Include the see-saw strategy in the output");
  solve->add_option("-o,--output", output, "Output file (default stdout)");

  auto* witness = app.add_subcommand("witness", "Emit the half-CAC quantum witness");
  witness->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Audit all 256 classes");
  teamq::AuditOptions audit_options;
  std::string chi_grid_text;
  std::string report_path;
  verify->add_option("--seed", audit_options.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--samples", audit_options.samples_per_class,
                     "Instances per class")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--chi-grid", chi_grid_text,
                     "Comma-separated chi values (default: 6 fixed + 4 seeded)");
  verify->add_option("--restarts", audit_options.seesaw_restarts,
                     "See-saw restarts for the CAC witness search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--threads", audit_options.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
  verify->add_option("--report", report_path, "Write the audit report JSON here");
  verify->add_option("-o,--output", output, "Summary table file (default stdout)");

  auto* report = app.add_subcommand("report", "Re-render a saved audit report");
  std::string saved_report;
  std::string report_format = "table";
  report->add_option("report", saved_report, "Audit report JSON")->required();
  report->add_option("--format", report_format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  report->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*classify) {
      emit(classify_format == "csv" ? classify_csv() : classify_table(), output);
    } else if (*orbit) {
      emit(dump(orbit_json(mask)), output);
    } else if (*solve) {
      emit(dump(solve_json(solve_config)), output);
    } else if (*witness) {
      emit(dump(witness_json()), output);
    } else if (*verify) {
      if (!chi_grid_text.empty()) audit_options.chi_grid = parse_chi_grid(chi_grid_text);
      auto result = teamq::audit_theorem(audit_options);
      if (!report_path.empty()) emit(dump(teamq::report_to_json(result)), report_path);
      emit(teamq::summary_table(result), output);
      return result.passed() ? 0 : kExitVerificationFailed;
    } else if (*report) {
      auto result = teamq::report_from_json(teamq::read_json_file(saved_report));
      if (report_format == "json") {
        emit(dump(teamq::report_to_json(result)), output);
      } else if (report_format == "csv") {
        emit(report_csv(result), output);
      } else {
        emit(teamq::summary_table(result), output);
      }
      return result.passed() ? 0 : kExitVerificationFailed;
    }
  } catch (const teamq::InputError& e) {
    std::cerr << "teamq: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "teamq: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "teamq: internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
