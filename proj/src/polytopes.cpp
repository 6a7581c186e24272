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

#include "teamq/polytopes.hpp"

#include <vector>

#include "teamq/simplex.hpp"

namespace teamq {

std::string to_string(const DeterministicLabel& label) {
  return "pi^" + std::to_string(label.alpha) + std::to_string(label.gamma) +
         std::to_string(label.beta) + std::to_string(label.delta);
}

std::string to_string(const NoSignallingLabel& label) {
  return "Q^" + std::to_string(label.alpha) + std::to_string(label.beta) +
         std::to_string(label.delta);
}

DeterministicLabel label_from_actions(int a0, int a1, int b0, int b1) {
  return {a0 ^ a1, b0 ^ b1, a0, b0};
}

std::array<DeterministicLabel, 16> all_deterministic_labels() {
  std::array<DeterministicLabel, 16> labels;
  for (int k = 0; k < 16; ++k) {
    labels[k] = {k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1};
  }
  return labels;
}

std::array<NoSignallingLabel, 8> all_no_signalling_labels() {
  std::array<NoSignallingLabel, 8> labels;
  for (int k = 0; k < 8; ++k) labels[k] = {k >> 2 & 1, k >> 1 & 1, k & 1};
  return labels;
}

Policy deterministic_vertex(const DeterministicLabel& label) {
  Policy policy;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      policy(label.action_a(xa), label.action_b(xb), xa, xb) = 1;
    }
  }
  return policy;
}

Policy ns_vertex(const NoSignallingLabel& label) {
  Policy policy;
  const Rational half = make_rational(1, 2);
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      for (int i = 0; i < 2; ++i) {
        policy(i, i ^ label.parity(xa, xb), xa, xb) = half;
      }
    }
  }
  return policy;
}

namespace {

Rational deterministic_cost(const std::array<Rational, 16>& weights,
                            const DeterministicLabel& label) {
  Rational total = 0;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      total += weights[Policy::index(label.action_a(xa), label.action_b(xb),
                                     xa, xb)];
    }
  }
  return total;
}

Rational no_signalling_cost(const std::array<Rational, 16>& weights,
                            const NoSignallingLabel& label) {
  Rational total = 0;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      int parity = label.parity(xa, xb);
      total += weights[Policy::index(0, parity, xa, xb)];
      total += weights[Policy::index(1, 1 ^ parity, xa, xb)];
    }
  }
  total /= 2;
  return total;
}

}  // namespace

std::array<Rational, 16> deterministic_costs(const ProblemInstance& instance) {
  auto weights = cost_weights(instance);
  std::array<Rational, 16> costs;
  auto labels = all_deterministic_labels();
  for (std::size_t k = 0; k < 16; ++k) {
    costs[k] = deterministic_cost(weights, labels[k]);
  }
  return costs;
}

std::array<Rational, 8> no_signalling_costs(const ProblemInstance& instance) {
  auto weights = cost_weights(instance);
  std::array<Rational, 8> costs;
  auto labels = all_no_signalling_labels();
  for (std::size_t k = 0; k < 8; ++k) {
    costs[k] = no_signalling_cost(weights, labels[k]);
  }
  return costs;
}

LocalOptimum local_optimum(const ProblemInstance& instance) {
  auto costs = deterministic_costs(instance);
  auto labels = all_deterministic_labels();
  std::size_t best = 0;
  for (std::size_t k = 1; k < 16; ++k) {
    if (costs[k] < costs[best]) best = k;
  }
  return {costs[best], labels[best]};
}

NoSignallingOptimum ns_optimum(const ProblemInstance& instance) {
  LocalOptimum local = local_optimum(instance);
  NoSignallingOptimum result{local.value, local.argmin};
  auto costs = no_signalling_costs(instance);
  auto labels = all_no_signalling_labels();
  for (std::size_t k = 0; k < 8; ++k) {
    if (costs[k] < result.value) {
      result.value = costs[k];
      result.argmin = labels[k];
    }
  }
  return result;
}

namespace {

// min t  s.t.  |sum_k w_k V_k(e) - Q(e)| <= t for all 16 entries e,
// sum_k w_k = 1, w >= 0. Variables: w (16), t, then one slack per
// inequality (32).
template <class T>
LocalMembership<T> solve_membership(const BasicPolicy<T>& policy, T eps,
                                    double tol) {
  constexpr std::size_t kWeights = 16;
  constexpr std::size_t kT = 16;
  constexpr std::size_t kVars = 16 + 1 + 32;
  auto labels = all_deterministic_labels();
  std::array<Policy, 16> vertices;
  for (std::size_t k = 0; k < 16; ++k) vertices[k] = deterministic_vertex(labels[k]);

  std::vector<std::vector<T>> a;
  std::vector<T> b;
  for (std::size_t e = 0; e < 16; ++e) {
    std::vector<T> upper(kVars, T(0)), lower(kVars, T(0));
    for (std::size_t k = 0; k < kWeights; ++k) {
      if (vertices[k].entries()[e] != 0) {
        upper[k] = 1;
        lower[k] = -1;
      }
    }
    upper[kT] = -1;
    lower[kT] = -1;
    upper[17 + 2 * e] = 1;
    lower[18 + 2 * e] = 1;
    a.push_back(std::move(upper));
    b.push_back(policy.entries()[e]);
    a.push_back(std::move(lower));
    b.push_back(T(-policy.entries()[e]));
  }
  std::vector<T> normalisation(kVars, T(0));
  for (std::size_t k = 0; k < kWeights; ++k) normalisation[k] = 1;
  a.push_back(std::move(normalisation));
  b.push_back(T(1));

  std::vector<T> c(kVars, T(0));
  c[kT] = 1;
  auto lp = DenseSimplex<T>(a, b, std::move(c), eps).solve();

  LocalMembership<T> result;
  // The program is always feasible (t can absorb any residual) and bounded
  // below by zero.
  result.distance = lp.x[kT];
  for (std::size_t k = 0; k < kWeights; ++k) result.weights[k] = lp.x[k];
  result.member = result.distance <= tol;
  return result;
}

}  // namespace

LocalMembership<Rational> local_membership(const Policy& policy) {
  return solve_membership<Rational>(policy, Rational(0), 0.0);
}

LocalMembership<double> local_membership(const PolicyF& policy, double tol) {
  return solve_membership<double>(policy, 1e-12, tol);
}

}  // namespace teamq
