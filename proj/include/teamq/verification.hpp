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

#ifndef TEAMQ_VERIFICATION_HPP_
#define TEAMQ_VERIFICATION_HPP_

// Machine checks for every elimination argument, and the class-by-class
// audit of the advantage classification.
//
// The elimination claims quantify over all instances. Here each claim is
// checked exactly (rational arithmetic) on sampled instances; a failure
// always carries the offending instance.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "teamq/quantum.hpp"
#include "teamq/superstructure.hpp"
#include "teamq/team_core.hpp"

namespace teamq {

struct Counterexample {
  std::optional<ProblemInstance> instance;
  std::string label;   // policy or vertex label involved, if any
  std::string detail;  // the violated relation with its values
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;
};

// ---- Sampling -------------------------------------------------------------

inline constexpr long kPriorDenominator = 10000;

// {1/4, 1/2, 3/4, 1, 2, 4} followed by four draws n/100, n in [1, 500].
std::vector<Rational> default_chi_grid(std::uint64_t seed);

// Uniform on the 7-simplex via sorted uniform spacings on the grid
// {0, 1/10^4, ..., 1}.
JointPrior sample_prior(std::mt19937_64& rng);

// Sample k uses chi_grid[k % chi_grid.size()].
std::vector<ProblemInstance> sample_instances(const BinaryCostPair& pair,
                                              int count,
                                              std::span<const Rational> chi_grid,
                                              std::mt19937_64& rng);

std::mt19937_64 class_rng(std::uint64_t seed, unsigned code);

// ---- Elimination checks ---------------------------------------------------

// J*_L == J** on every instance. Throws std::invalid_argument when the pair
// is not overlapping.
CheckResult check_overlap_elimination(
    const BinaryCostPair& pair, std::span<const ProblemInstance> instances);

// Same conclusion for pairs with a null matrix. Throws std::invalid_argument
// when neither matrix is null.
CheckResult check_null_elimination(const BinaryCostPair& pair,
                                   std::span<const ProblemInstance> instances);

// J*_NS == J*_L on every instance.
CheckResult check_ns_equals_local(std::span<const ProblemInstance> instances);

// J*_L >= J*_NS >= J** on every instance.
CheckResult check_hierarchy(std::span<const ProblemInstance> instances);

// The two constant deterministic policies whose half-sum bounds every
// nonlocal vertex for the family's generator.
std::pair<DeterministicLabel, DeterministicLabel> bounding_policies(
    VertexBoundFamily family);

struct VertexBoundCheck {
  CheckResult result;
  // Every nonlocal vertex cost equals the half-sum.
  bool tight = true;
};

// J(Q^{abd}) >= (J(pi_hat) + J(pi_bar)) / 2 for all 8 nonlocal vertices.
// Throws std::invalid_argument unless the instance's pair is the family
// generator.
VertexBoundCheck check_vertex_bound(VertexBoundFamily family,
                                    const ProblemInstance& instance);

struct BooleanDecomposition {
  int x = 0, y = 0, z = 0, w = 0, a = 0, b = 0;
};

using DecompositionFormula =
    std::function<BooleanDecomposition(int alpha, int beta, int delta)>;

// Labels (x, y, z, w) and (1, 1, a, b) of the two local vertices whose
// average matches Q^{alpha beta delta} on the (u_A^0, u_B^0) entry.
BooleanDecomposition c13_decomposition(int alpha, int beta, int delta);

struct DecompositionCheck {
  bool pass = true;
  int assignments = 0;
  // (alpha, beta, delta, xi_A, xi_B) of the first mismatch.
  std::optional<std::array<int, 5>> violation;
};

// Exhausts all 32 assignments of (alpha, beta, delta, xi_A, xi_B).
DecompositionCheck check_c13_decomposition(
    const DecompositionFormula& formula = c13_decomposition);

struct DecompositionMutant {
  std::string description;  // e.g. "z: d | (d & a & b)"
  DecompositionFormula formula;
  // True when the mutation leaves both vertices' (u_A^0, u_B^0) entries
  // unchanged for every assignment, so it cannot be detected.
  bool equivalent = false;
};

// Every formula with exactly one literal negated.
std::vector<DecompositionMutant> c13_literal_mutants();

// Every nonlocal vertex costs exactly the average of its two decomposition
// vertices. Throws std::invalid_argument unless the instance's pair is the
// 1-3 achiral generator.
CheckResult check_c13_cost_consequence(const ProblemInstance& instance);

// ---- Advantage witnesses --------------------------------------------------

struct AdvantageWitness {
  ProblemInstance instance;
  QuantumStrategy strategy;
  double quantum_value = 0.0;
  Rational local_value;
  double gap() const { return local_value.get_d() - quantum_value; }
};

// Carries a witness along an action sequence. The gap is preserved by T, R,
// R' and scaled by 1 / chi under E.
AdvantageWitness transport_witness(const AdvantageWitness& witness,
                                   std::span<const GroupAction> path);

AdvantageWitness half_cac_advantage();

// Priors with uniform observations and xi_W = xi_A xi_B with probability p,
// p in {1, 19/20, ..., 3/4}; returns the see-saw result with the largest gap
// for the CAC pair at the given chi.
AdvantageWitness search_cac_advantage(const Rational& chi, int restarts,
                                      std::uint64_t seed);

// ---- Audit ----------------------------------------------------------------

struct AuditOptions {
  std::uint64_t seed = 0;
  int samples_per_class = 500;
  std::vector<Rational> chi_grid;  // empty selects default_chi_grid(seed)
  int seesaw_restarts = 32;
  unsigned threads = 0;            // 0: hardware concurrency
};

struct ClassAudit {
  ClassificationRecord record;
  std::vector<CheckResult> checks;
  // J*_L - J_quantum for the witness carried to this class.
  std::optional<double> quantum_gap;
  bool passed() const;
};

struct AuditReport {
  std::uint64_t seed = 0;
  int samples_per_class = 0;
  std::vector<Rational> chi_grid;
  std::vector<ClassAudit> classes;
  std::vector<CheckResult> global_checks;
  bool passed() const;
};

AuditReport audit_theorem(const AuditOptions& options);

}  // namespace teamq

#endif  // TEAMQ_VERIFICATION_HPP_
