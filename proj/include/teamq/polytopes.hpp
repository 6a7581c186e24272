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

#ifndef TEAMQ_POLYTOPES_HPP_
#define TEAMQ_POLYTOPES_HPP_

// Vertices of the local and no-signalling polytopes for two agents with
// binary observations and actions, exact optima over each, local-polytope
// membership, and the CHSH score.

#include <array>
#include <cmath>
#include <compare>
#include <string>
#include <type_traits>
#include <variant>

#include "teamq/team_core.hpp"

namespace teamq {

// pi^{alpha gamma beta delta}: A plays i = alpha*xi_A ^ beta, B plays
// j = gamma*xi_B ^ delta. Ordering is lexicographic on (alpha, gamma, beta,
// delta), which is also the tie-break for local_optimum.
struct DeterministicLabel {
  int alpha = 0;
  int gamma = 0;
  int beta = 0;
  int delta = 0;

  int action_a(int xi_a) const { return (alpha & xi_a) ^ beta; }
  int action_b(int xi_b) const { return (gamma & xi_b) ^ delta; }

  friend auto operator<=>(const DeterministicLabel&,
                          const DeterministicLabel&) = default;
};

// Nonlocal vertex Q^{alpha beta delta}: mass 1/2 on each (i, j) with
// i ^ j = xi_A*xi_B ^ alpha*xi_A ^ beta*xi_B ^ delta.
struct NoSignallingLabel {
  int alpha = 0;
  int beta = 0;
  int delta = 0;

  int parity(int xi_a, int xi_b) const {
    return (xi_a & xi_b) ^ (alpha & xi_a) ^ (beta & xi_b) ^ delta;
  }

  friend auto operator<=>(const NoSignallingLabel&,
                          const NoSignallingLabel&) = default;
};

std::string to_string(const DeterministicLabel& label);
std::string to_string(const NoSignallingLabel& label);

// Label whose actions are gamma_A(0), gamma_A(1), gamma_B(0), gamma_B(1).
DeterministicLabel label_from_actions(int a0, int a1, int b0, int b1);

std::array<DeterministicLabel, 16> all_deterministic_labels();
std::array<NoSignallingLabel, 8> all_no_signalling_labels();

Policy deterministic_vertex(const DeterministicLabel& label);
Policy ns_vertex(const NoSignallingLabel& label);

// Both marginal families independent of the other agent's observation,
// within tol (exact comparison for Rational with tol = 0).
template <class T>
bool is_no_signalling(const BasicPolicy<T>& policy, double tol) {
  auto close = [tol](const T& x, const T& y) {
    if constexpr (std::is_same_v<T, double>) {
      return std::abs(x - y) <= tol;
    } else {
      T diff = x - y;
      if (diff < 0) diff = -diff;
      return diff <= tol;
    }
  };
  for (int u = 0; u < 2; ++u) {
    for (int x = 0; x < 2; ++x) {
      T a0 = policy(u, 0, x, 0) + policy(u, 1, x, 0);
      T a1 = policy(u, 0, x, 1) + policy(u, 1, x, 1);
      if (!close(a0, a1)) return false;
      T b0 = policy(0, u, 0, x) + policy(1, u, 0, x);
      T b1 = policy(0, u, 1, x) + policy(1, u, 1, x);
      if (!close(b0, b1)) return false;
    }
  }
  return true;
}

struct LocalOptimum {
  Rational value;
  DeterministicLabel argmin;
};

struct NoSignallingOptimum {
  Rational value;
  // A local vertex wins ties against nonlocal ones.
  std::variant<DeterministicLabel, NoSignallingLabel> argmin;
};

LocalOptimum local_optimum(const ProblemInstance& instance);
NoSignallingOptimum ns_optimum(const ProblemInstance& instance);

// Costs of all 16 deterministic vertices, indexed like
// all_deterministic_labels().
std::array<Rational, 16> deterministic_costs(const ProblemInstance& instance);
std::array<Rational, 8> no_signalling_costs(const ProblemInstance& instance);

template <class T>
struct LocalMembership {
  bool member = false;
  // Max-norm distance from the policy to the local polytope.
  T distance{};
  // Convex weights over all_deterministic_labels() attaining `distance`.
  std::array<T, 16> weights{};
};

// Exact decision (distance == 0) by rational simplex.
LocalMembership<Rational> local_membership(const Policy& policy);
// Float decision: member iff distance <= tol.
LocalMembership<double> local_membership(const PolicyF& policy,
                                         double tol = 1e-9);

// S = sum_{xi_A, xi_B} (-1)^{xi_A xi_B} E(xi_A, xi_B), with correlator
// E = sum_{i, j} (-1)^{i ^ j} Q(i, j | xi_A, xi_B).
template <class T>
T chsh_value(const BasicPolicy<T>& policy) {
  T total = 0;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      T correlator = 0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          if ((i ^ j) == 0) {
            correlator += policy(i, j, xa, xb);
          } else {
            correlator -= policy(i, j, xa, xb);
          }
        }
      }
      if ((xa & xb) == 0) {
        total += correlator;
      } else {
        total -= correlator;
      }
    }
  }
  return total;
}

}  // namespace teamq

#endif  // TEAMQ_POLYTOPES_HPP_
