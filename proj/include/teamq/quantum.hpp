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

#ifndef TEAMQ_QUANTUM_HPP_
#define TEAMQ_QUANTUM_HPP_

// Qubit quantum strategies: a shared two-qubit state and one projective
// measurement per agent and observation. Occupation measures, costs, the
// explicit half-CAC witness, and a see-saw search over qubit strategies.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "teamq/linalg.hpp"
#include "teamq/polytopes.hpp"
#include "teamq/superstructure.hpp"
#include "teamq/team_core.hpp"

namespace teamq {

struct QuantumStrategy {
  Matrix4c rho;
  // proj_a[xi_A][u_A], proj_b[xi_B][u_B].
  std::array<std::array<Matrix2c, 2>, 2> proj_a;
  std::array<std::array<Matrix2c, 2>, 2> proj_b;
};

struct StrategyCheck {
  bool ok = true;
  std::string failure;  // first violated constraint, empty when ok
  explicit operator bool() const { return ok; }
};

// Density matrix Hermitian, unit trace, PSD; projectors Hermitian,
// idempotent and complete per observation. All within tol.
StrategyCheck validate_strategy(const QuantumStrategy& strategy,
                                double tol = 1e-9);

// Q(u_A, u_B | xi_A, xi_B) = Tr(P^A (x) P^B rho).
PolicyF occupation_measure(const QuantumStrategy& strategy);

double quantum_cost(const ProblemInstance& instance,
                    const QuantumStrategy& strategy);

// Delta projectors (0 or I) reproducing the deterministic vertex, with the
// maximally mixed state.
QuantumStrategy embed_deterministic(const DeterministicLabel& label);

// 1/2 (I + n . sigma) with n = (sin t cos p, sin t sin p, cos t).
Matrix2c bloch_projector(double theta, double phi);

// (1 / lambda) [[a, conj(phase)], [phase, b]] with phase = e^{i theta}.
Matrix2c phased_matrix(double lambda, double a, double b, Complex phase);

// Agents exchanged (T), A's or B's outcomes relabelled (R, R'), or the
// strategy unchanged (I, E). Pairs with transport_instance.
QuantumStrategy transport_strategy(const QuantumStrategy& strategy,
                                   GroupAction action);

struct Witness {
  ProblemInstance instance;
  QuantumStrategy strategy;
};

// Half-CAC instance with chi = 2 and prior mass 1/5 on (0,0,1), (0,1,1),
// (1,0,1) and 2/5 on (1,1,0), together with a qubit strategy of cost
// (-7 - 3 sqrt 3) / 10 < -6/5.
Witness half_cac_witness();

inline constexpr double kHalfCacWitnessCost =
    -1.2196152422706631880582339;  // (-7 - 3 sqrt 3) / 10

struct SeesawOptions {
  int restarts = 32;
  int max_iters = 500;
  std::uint64_t seed = 0;
  // Stop a restart when a full sweep improves by less than this.
  double tolerance = 1e-12;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SeesawResult {
  QuantumStrategy strategy;
  double value = 0.0;
  bool converged = false;  // best restart stopped before max_iters
  int best_restart = 0;
  int iterations = 0;      // sweeps used by the best restart
  // Objective after every partial update of the best restart.
  std::vector<double> trace;
  // Largest single-step increase seen across all restarts.
  double max_step_increase = 0.0;
};

// Alternating minimisation: each agent's projectors become the negative
// eigenspace projectors of their effective 2x2 operators, and the state the
// lowest eigenvector of the 4x4 cost operator. Restarts draw uniform Bloch
// angles from a generator seeded by (seed, restart index).
SeesawResult seesaw_optimize(const ProblemInstance& instance,
                             const SeesawOptions& options = {});
SeesawResult seesaw_optimize(const ProblemInstance& instance, int restarts,
                             int max_iters, std::uint64_t seed);

}  // namespace teamq

#endif  // TEAMQ_QUANTUM_HPP_
