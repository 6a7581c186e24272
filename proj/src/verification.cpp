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

#include "teamq/verification.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <stdexcept>
#include <thread>

#include "teamq/polytopes.hpp"

namespace teamq {

// ---- Sampling -------------------------------------------------------------

std::vector<Rational> default_chi_grid(std::uint64_t seed) {
  std::vector<Rational> grid = {make_rational(1, 4), make_rational(1, 2),
                                make_rational(3, 4), make_rational(1),
                                make_rational(2),    make_rational(4)};
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0xC41u};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> numerator(1, 500);
  for (int k = 0; k < 4; ++k) grid.push_back(make_rational(numerator(rng), 100));
  return grid;
}

JointPrior sample_prior(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> cut(0, kPriorDenominator);
  std::array<long, 9> points{};
  points[0] = 0;
  points[8] = kPriorDenominator;
  for (std::size_t k = 1; k < 8; ++k) points[k] = cut(rng);
  std::sort(points.begin() + 1, points.begin() + 8);
  std::array<Rational, 8> masses;
  for (std::size_t k = 0; k < 8; ++k) {
    masses[k] = make_rational(points[k + 1] - points[k], kPriorDenominator);
  }
  return JointPrior::exact(masses);
}

std::vector<ProblemInstance> sample_instances(const BinaryCostPair& pair,
                                              int count,
                                              std::span<const Rational> chi_grid,
                                              std::mt19937_64& rng) {
  if (chi_grid.empty()) throw std::invalid_argument("empty chi grid");
  std::vector<ProblemInstance> instances;
  instances.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    instances.emplace_back(pair, sample_prior(rng),
                           chi_grid[static_cast<std::size_t>(k) % chi_grid.size()]);
  }
  return instances;
}

std::mt19937_64 class_rng(std::uint64_t seed, unsigned code) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), code};
  return std::mt19937_64(seq);
}

// ---- Elimination checks ---------------------------------------------------

namespace {

// Runs `violation` on each instance; the first non-empty detail becomes the
// counterexample.
template <class Fn>
CheckResult over_instances(std::string name,
                           std::span<const ProblemInstance> instances,
                           Fn violation) {
  CheckResult result;
  result.name = std::move(name);
  for (const auto& instance : instances) {
    ++result.cases;
    if (std::optional<Counterexample> bad = violation(instance)) {
      result.pass = false;
      result.counterexample = std::move(bad);
      result.counterexample->instance = instance;
      break;
    }
  }
  return result;
}

Counterexample relation(std::string label, std::string detail) {
  return {std::nullopt, std::move(label), std::move(detail)};
}

std::optional<Counterexample> local_equals_central(const ProblemInstance& d) {
  auto local = local_optimum(d);
  auto central = centralized_optimum(d);
  if (local.value == central.value) return std::nullopt;
  return relation(to_string(local.argmin),
                  "J*_L = " + to_string(local.value) +
                      " != J** = " + to_string(central.value));
}

}  // namespace

CheckResult check_overlap_elimination(
    const BinaryCostPair& pair, std::span<const ProblemInstance> instances) {
  if (!is_overlapping(pair)) {
    throw std::invalid_argument("overlap elimination needs an overlapping pair");
  }
  return over_instances("overlap-elimination", instances, local_equals_central);
}

CheckResult check_null_elimination(const BinaryCostPair& pair,
                                   std::span<const ProblemInstance> instances) {
  auto mn = mn_signature(pair);
  if (mn.m != 0 && mn.n != 0) {
    throw std::invalid_argument("null elimination needs a null matrix");
  }
  return over_instances("null-elimination", instances, local_equals_central);
}

CheckResult check_ns_equals_local(std::span<const ProblemInstance> instances) {
  return over_instances(
      "ns-equals-local", instances,
      [](const ProblemInstance& d) -> std::optional<Counterexample> {
        auto local = local_optimum(d);
        auto ns = ns_optimum(d);
        if (ns.value == local.value) return std::nullopt;
        std::string label = std::visit(
            [](const auto& l) { return to_string(l); }, ns.argmin);
        return relation(label, "J*_NS = " + to_string(ns.value) +
                                   " < J*_L = " + to_string(local.value));
      });
}

CheckResult check_hierarchy(std::span<const ProblemInstance> instances) {
  return over_instances(
      "hierarchy", instances,
      [](const ProblemInstance& d) -> std::optional<Counterexample> {
        auto local = local_optimum(d).value;
        auto ns = ns_optimum(d).value;
        auto central = centralized_optimum(d).value;
        if (local >= ns && ns >= central) return std::nullopt;
        return relation("", "J*_L = " + to_string(local) + ", J*_NS = " +
                                to_string(ns) + ", J** = " + to_string(central));
      });
}

std::pair<DeterministicLabel, DeterministicLabel> bounding_policies(
    VertexBoundFamily family) {
  const DeterministicLabel both_zero = label_from_actions(0, 0, 0, 0);
  switch (family) {
    case VertexBoundFamily::kC11c:
      return {both_zero, label_from_actions(0, 0, 1, 1)};
    case VertexBoundFamily::kC11a:
    case VertexBoundFamily::kC12a:
    case VertexBoundFamily::kC22a:
      return {both_zero, label_from_actions(1, 1, 1, 1)};
  }
  throw std::invalid_argument("unknown family");
}

VertexBoundCheck check_vertex_bound(VertexBoundFamily family,
                                    const ProblemInstance& instance) {
  if (!(instance.cost_pair() == family_generator(family))) {
    throw std::invalid_argument("instance is not in the " +
                                std::string(to_string(family)) +
                                " generator class");
  }
  VertexBoundCheck check;
  check.result.name = "vertex-bound:" + std::string(to_string(family));
  auto [hat, bar] = bounding_policies(family);
  auto costs = deterministic_costs(instance);
  auto labels = all_deterministic_labels();
  auto cost_of = [&](const DeterministicLabel& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    return costs[static_cast<std::size_t>(it - labels.begin())];
  };
  Rational half_sum = (cost_of(hat) + cost_of(bar)) / 2;
  auto ns_costs = no_signalling_costs(instance);
  auto ns_labels = all_no_signalling_labels();
  for (std::size_t k = 0; k < 8; ++k) {
    ++check.result.cases;
    if (ns_costs[k] != half_sum) check.tight = false;
    if (ns_costs[k] < half_sum && check.result.pass) {
      check.result.pass = false;
      check.result.counterexample = Counterexample{
          instance, to_string(ns_labels[k]),
          "J(Q) = " + to_string(ns_costs[k]) + " < half-sum " +
              to_string(half_sum)};
    }
  }
  return check;
}

BooleanDecomposition c13_decomposition(int alpha, int beta, int delta) {
  const int a = alpha, b = beta, d = delta;
  const int na = 1 - a, nb = 1 - b, nd = 1 - d;
  BooleanDecomposition r;
  r.x = (nb & nd) | (b & a & d);
  r.y = na & nd & b;
  r.z = d | (nd & a & b);
  r.w = (a & (b ^ d)) | (na & d);
  r.a = nb | (b & na & nd);
  r.b = (na & (b | d)) | (a & (nb ^ d));
  return r;
}

namespace {

struct EntryPair {
  Rational first;
  Rational second;
};

// (u_A^0, u_B^0) entries of pi^{xyzw} and pi^{11ab} at (xi_A, xi_B).
EntryPair decomposition_entries(const BooleanDecomposition& dec, int xa,
                                int xb) {
  DeterministicLabel first{dec.x, dec.y, dec.z, dec.w};
  DeterministicLabel second{1, 1, dec.a, dec.b};
  return {deterministic_vertex(first)(0, 0, xa, xb),
          deterministic_vertex(second)(0, 0, xa, xb)};
}

}  // namespace

DecompositionCheck check_c13_decomposition(const DecompositionFormula& formula) {
  DecompositionCheck check;
  for (int bits = 0; bits < 32; ++bits) {
    const int alpha = bits >> 4 & 1, beta = bits >> 3 & 1, delta = bits >> 2 & 1;
    const int xa = bits >> 1 & 1, xb = bits & 1;
    ++check.assignments;
    Rational lhs = ns_vertex({alpha, beta, delta})(0, 0, xa, xb);
    auto entries = decomposition_entries(formula(alpha, beta, delta), xa, xb);
    Rational rhs = (entries.first + entries.second) / 2;
    if (lhs != rhs) {
      check.pass = false;
      check.violation = std::array<int, 5>{alpha, beta, delta, xa, xb};
      break;
    }
  }
  return check;
}

namespace {

// Boolean expression over the variables a (alpha), b (beta), d (delta), used
// only to enumerate literal mutations of the decomposition formulas.
struct Expr {
  enum class Kind { kLiteral, kAnd, kOr, kXor };
  Kind kind = Kind::kLiteral;
  char var = 'a';
  bool negated = false;
  std::vector<Expr> kids;

  int eval(int a, int b, int d) const {
    switch (kind) {
      case Kind::kLiteral: {
        int v = var == 'a' ? a : var == 'b' ? b : d;
        return negated ? 1 - v : v;
      }
      case Kind::kAnd: {
        int v = 1;
        for (const auto& k : kids) v &= k.eval(a, b, d);
        return v;
      }
      case Kind::kOr: {
        int v = 0;
        for (const auto& k : kids) v |= k.eval(a, b, d);
        return v;
      }
      case Kind::kXor: {
        int v = 0;
        for (const auto& k : kids) v ^= k.eval(a, b, d);
        return v;
      }
    }
    return 0;
  }

  std::string str(bool top = true) const {
    if (kind == Kind::kLiteral) return (negated ? "~" : "") + std::string(1, var);
    const char* op = kind == Kind::kAnd ? " & " : kind == Kind::kOr ? " | " : " ^ ";
    std::string s;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) s += op;
      s += kids[i].str(false);
    }
    return top ? s : "(" + s + ")";
  }

  int literal_count() const {
    if (kind == Kind::kLiteral) return 1;
    int n = 0;
    for (const auto& k : kids) n += k.literal_count();
    return n;
  }

  // Negates the literal with the given preorder index; returns the remaining
  // index budget.
  int flip(int index) {
    if (kind == Kind::kLiteral) {
      if (index == 0) negated = !negated;
      return index - 1;
    }
    for (auto& k : kids) {
      index = k.flip(index);
      if (index < 0) break;
    }
    return index;
  }
};

Expr lit(char v, bool neg = false) { return {Expr::Kind::kLiteral, v, neg, {}}; }
Expr all(std::vector<Expr> k) { return {Expr::Kind::kAnd, 'a', false, std::move(k)}; }
Expr any(std::vector<Expr> k) { return {Expr::Kind::kOr, 'a', false, std::move(k)}; }
Expr xor_of(std::vector<Expr> k) { return {Expr::Kind::kXor, 'a', false, std::move(k)}; }

// Same six formulas as c13_decomposition, as expression trees.
std::array<Expr, 6> decomposition_trees() {
  return {
      any({all({lit('b', true), lit('d', true)}),
           all({lit('b'), lit('a'), lit('d')})}),
      all({lit('a', true), lit('d', true), lit('b')}),
      any({lit('d'), all({lit('d', true), lit('a'), lit('b')})}),
      any({all({lit('a'), xor_of({lit('b'), lit('d')})}),
           all({lit('a', true), lit('d')})}),
      any({lit('b', true), all({lit('b'), lit('a', true), lit('d', true)})}),
      any({all({lit('a', true), any({lit('b'), lit('d')})}),
           all({lit('a'), xor_of({lit('b', true), lit('d')})})}),
  };
}

BooleanDecomposition eval_trees(const std::array<Expr, 6>& t, int a, int b,
                                int d) {
  return {t[0].eval(a, b, d), t[1].eval(a, b, d), t[2].eval(a, b, d),
          t[3].eval(a, b, d), t[4].eval(a, b, d), t[5].eval(a, b, d)};
}

}  // namespace

std::vector<DecompositionMutant> c13_literal_mutants() {
  static constexpr std::array<char, 6> kOutputs = {'x', 'y', 'z', 'w', 'a', 'b'};
  const auto base = decomposition_trees();
  std::vector<DecompositionMutant> mutants;
  for (std::size_t f = 0; f < base.size(); ++f) {
    for (int lit_index = 0; lit_index < base[f].literal_count(); ++lit_index) {
      auto trees = base;
      trees[f].flip(lit_index);
      DecompositionMutant m;
      m.description = std::string(1, kOutputs[f]) + ": " + trees[f].str();
      m.formula = [trees](int a, int b, int d) { return eval_trees(trees, a, b, d); };
      m.equivalent = true;
      for (int bits = 0; bits < 32 && m.equivalent; ++bits) {
        int a = bits >> 4 & 1, b = bits >> 3 & 1, d = bits >> 2 & 1;
        int xa = bits >> 1 & 1, xb = bits & 1;
        auto lhs = decomposition_entries(c13_decomposition(a, b, d), xa, xb);
        auto rhs = decomposition_entries(m.formula(a, b, d), xa, xb);
        m.equivalent = lhs.first == rhs.first && lhs.second == rhs.second;
      }
      mutants.push_back(std::move(m));
    }
  }
  return mutants;
}

CheckResult check_c13_cost_consequence(const ProblemInstance& instance) {
  if (!(instance.cost_pair() == c13_achiral_generator())) {
    throw std::invalid_argument("instance is not in the 1-3 achiral class");
  }
  CheckResult result;
  result.name = "c13-cost-decomposition";
  auto costs = deterministic_costs(instance);
  auto ns_costs = no_signalling_costs(instance);
  auto labels = all_deterministic_labels();
  auto index_of = [&](const DeterministicLabel& l) {
    return static_cast<std::size_t>(
        std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  for (const auto& label : all_no_signalling_labels()) {
    ++result.cases;
    auto dec = c13_decomposition(label.alpha, label.beta, label.delta);
    DeterministicLabel first{dec.x, dec.y, dec.z, dec.w};
    DeterministicLabel second{1, 1, dec.a, dec.b};
    Rational average = (costs[index_of(first)] + costs[index_of(second)]) / 2;
    const Rational& actual =
        ns_costs[static_cast<std::size_t>(label.alpha << 2 | label.beta << 1 |
                                          label.delta)];
    if (actual != average) {
      result.pass = false;
      result.counterexample = Counterexample{
          instance, to_string(label),
          "J(Q) = " + to_string(actual) + " != average " + to_string(average) +
              " of " + to_string(first) + " and " + to_string(second)};
      break;
    }
  }
  return result;
}

// ---- Advantage witnesses --------------------------------------------------

AdvantageWitness transport_witness(const AdvantageWitness& witness,
                                   std::span<const GroupAction> path) {
  AdvantageWitness out = witness;
  for (GroupAction action : path) {
    out.instance = transport_instance(out.instance, action);
    out.strategy = transport_strategy(out.strategy, action);
  }
  out.quantum_value = quantum_cost(out.instance, out.strategy);
  out.local_value = local_optimum(out.instance).value;
  return out;
}

AdvantageWitness half_cac_advantage() {
  auto [instance, strategy] = half_cac_witness();
  double value = quantum_cost(instance, strategy);
  Rational local = local_optimum(instance).value;
  return {std::move(instance), std::move(strategy), value, std::move(local)};
}

AdvantageWitness search_cac_advantage(const Rational& chi, int restarts,
                                      std::uint64_t seed) {
  std::optional<AdvantageWitness> best;
  for (long twentieths = 20; twentieths >= 15; --twentieths) {
    const Rational p = make_rational(twentieths, 20);
    std::array<Rational, 8> masses;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int w = 0; w < 2; ++w) {
          Rational match = w == (a & b) ? p : Rational(1 - p);
          masses[JointPrior::index(a, b, w)] = match / 4;
        }
      }
    }
    ProblemInstance instance(cac_form(), JointPrior::exact(masses), chi);
    auto seesaw = seesaw_optimize(instance, restarts, 500, seed);
    AdvantageWitness candidate{instance, seesaw.strategy, seesaw.value,
                               local_optimum(instance).value};
    if (!best || candidate.gap() > best->gap()) best = std::move(candidate);
  }
  return *best;
}

// ---- Audit ----------------------------------------------------------------

bool ClassAudit::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

bool AuditReport::passed() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const ClassAudit& c) { return c.passed(); }) &&
         std::all_of(global_checks.begin(), global_checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

constexpr double kCacGapThreshold = 1e-3;

std::vector<CheckResult> global_checks() {
  std::vector<CheckResult> checks;

  auto decomposition = check_c13_decomposition();
  CheckResult dec{"c13-decomposition-exhaustive", decomposition.pass,
                  static_cast<std::size_t>(decomposition.assignments), {}};
  if (decomposition.violation) {
    const auto& v = *decomposition.violation;
    dec.counterexample = Counterexample{
        std::nullopt, "",
        "alpha,beta,delta,xi_A,xi_B = " + std::to_string(v[0]) + "," +
            std::to_string(v[1]) + "," + std::to_string(v[2]) + "," +
            std::to_string(v[3]) + "," + std::to_string(v[4])};
  }
  checks.push_back(std::move(dec));

  CheckResult controls{"c13-mutants-rejected", true, 0, {}};
  for (const auto& mutant : c13_literal_mutants()) {
    if (mutant.equivalent) continue;
    ++controls.cases;
    if (check_c13_decomposition(mutant.formula).pass) {
      controls.pass = false;
      controls.counterexample =
          Counterexample{std::nullopt, mutant.description, "mutant accepted"};
      break;
    }
  }
  checks.push_back(std::move(controls));

  CheckResult counting{"counting-eliminated-124", true, 256, {}};
  int eliminated = 0;
  for (const auto& record : classify_all()) {
    if (record.verdict == Verdict::kNull || record.verdict == Verdict::kPigeonhole) {
      ++eliminated;
    }
  }
  if (eliminated != 124) {
    counting.pass = false;
    counting.counterexample = Counterexample{
        std::nullopt, "", "eliminated " + std::to_string(eliminated)};
  }
  checks.push_back(std::move(counting));
  return checks;
}

CheckResult gap_check(const AdvantageWitness& w, double threshold) {
  CheckResult result{"quantum-gap", true, 1, {}};
  auto valid = validate_strategy(w.strategy);
  if (!valid || !(w.gap() > threshold)) {
    result.pass = false;
    result.counterexample = Counterexample{
        w.instance, "",
        !valid ? "invalid strategy: " + valid.failure
               : "gap " + std::to_string(w.gap()) + " <= " +
                     std::to_string(threshold)};
  }
  return result;
}

ClassAudit audit_class(const BinaryCostPair& pair, const AuditOptions& options,
                       std::span<const Rational> chi_grid,
                       const AdvantageWitness& half_cac,
                       const AdvantageWitness& cac) {
  ClassAudit audit;
  audit.record = classify(pair);
  auto rng = class_rng(options.seed, pair.code());
  auto instances = sample_instances(pair, options.samples_per_class, chi_grid, rng);

  audit.checks.push_back(check_hierarchy(instances));
  const Verdict verdict = audit.record.verdict;
  if (!is_advantage(verdict)) audit.checks.push_back(check_ns_equals_local(instances));

  switch (verdict) {
    case Verdict::kNull:
      audit.checks.push_back(check_null_elimination(pair, instances));
      break;
    case Verdict::kPigeonhole:
    case Verdict::kOverlap:
      audit.checks.push_back(check_overlap_elimination(pair, instances));
      break;
    case Verdict::kVertexBound:
      for (VertexBoundFamily family : kVertexBoundFamilies) {
        if (!(pair == family_generator(family))) continue;
        const bool needs_tight = family == VertexBoundFamily::kC22a;
        audit.checks.push_back(over_instances(
            "vertex-bound:" + std::string(to_string(family)), instances,
            [&](const ProblemInstance& d) -> std::optional<Counterexample> {
              auto check = check_vertex_bound(family, d);
              if (!check.result.pass) return check.result.counterexample;
              if (needs_tight && !check.tight) {
                return relation("", "half-sum bound is not tight");
              }
              return std::nullopt;
            }));
      }
      break;
    case Verdict::kDecomposition:
      if (pair == c13_achiral_generator()) {
        audit.checks.push_back(over_instances(
            "c13-cost-decomposition", instances,
            [](const ProblemInstance& d) -> std::optional<Counterexample> {
              auto check = check_c13_cost_consequence(d);
              if (check.pass) return std::nullopt;
              return check.counterexample;
            }));
      }
      break;
    case Verdict::kCacOrbit:
    case Verdict::kHalfCacOrbit: {
      const bool is_cac = verdict == Verdict::kCacOrbit;
      const AdvantageWitness& base = is_cac ? cac : half_cac;
      auto path = action_path(base.instance.cost_pair(), pair);
      auto carried = transport_witness(base, path);
      audit.quantum_gap = carried.gap();
      audit.checks.push_back(gap_check(carried, is_cac ? kCacGapThreshold : 0.0));
      break;
    }
  }
  return audit;
}

}  // namespace

AuditReport audit_theorem(const AuditOptions& options) {
  if (options.samples_per_class < 1) {
    throw std::invalid_argument("samples_per_class must be at least 1");
  }
  AuditReport report;
  report.seed = options.seed;
  report.samples_per_class = options.samples_per_class;
  report.chi_grid =
      options.chi_grid.empty() ? default_chi_grid(options.seed) : options.chi_grid;
  report.global_checks = global_checks();

  const AdvantageWitness half_cac = half_cac_advantage();
  const AdvantageWitness cac =
      search_cac_advantage(make_rational(3, 4), options.seesaw_restarts, options.seed);

  const auto classes = enumerate_classes();
  report.classes.resize(classes.size());
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < classes.size(); k = next++) {
      report.classes[k] =
          audit_class(classes[k], options, report.chi_grid, half_cac, cac);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return report;
}

}  // namespace teamq
