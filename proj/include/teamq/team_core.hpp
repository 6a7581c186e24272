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

#ifndef TEAMQ_TEAM_CORE_HPP_
#define TEAMQ_TEAM_CORE_HPP_

// Binary two-agent static team problems: cost pairs, priors, instances,
// conditional policies, and expected-cost evaluation.
//
// Indexing is 0-based throughout. Action index i of agent A and j of agent B
// address entry [i][j] of the cost matrices; observations and the hidden
// state are bits.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "teamq/rational.hpp"

namespace teamq {

using CostMatrix = std::array<std::array<int, 2>, 2>;

// The (M, N) tuple selecting one of the 256 problem classes. Every entry is
// 0 or -1.
class BinaryCostPair {
 public:
  BinaryCostPair() = default;
  // Throws std::invalid_argument when an entry is outside {0, -1}.
  BinaryCostPair(const CostMatrix& m, const CostMatrix& n);

  // code = mask(M) << 4 | mask(N), where bit k of a mask is set iff entry
  // (k / 2, k % 2) equals -1. Throws std::out_of_range for code > 255.
  static BinaryCostPair from_code(unsigned code);
  unsigned code() const;

  const CostMatrix& m() const { return m_; }
  const CostMatrix& n() const { return n_; }

  friend bool operator==(const BinaryCostPair& a, const BinaryCostPair& b) {
    return a.m_ == b.m_ && a.n_ == b.n_;
  }
  friend std::strong_ordering operator<=>(const BinaryCostPair& a,
                                          const BinaryCostPair& b) {
    return a.code() <=> b.code();
  }

 private:
  CostMatrix m_{};
  CostMatrix n_{};
};

unsigned matrix_mask(const CostMatrix& matrix);
CostMatrix matrix_from_mask(unsigned mask);

// Joint distribution over (xi_A, xi_B, xi_W) in {0,1}^3.
//
// Exact priors must sum to one exactly. Priors built from doubles are stored
// as the exact rational value of each double and need only sum to one within
// kFloatSumTolerance.
class JointPrior {
 public:
  static constexpr double kFloatSumTolerance = 1e-12;

  static constexpr std::size_t index(int xi_a, int xi_b, int xi_w) {
    return static_cast<std::size_t>(xi_a << 2 | xi_b << 1 | xi_w);
  }

  // Throws std::invalid_argument on a negative entry or a bad total.
  static JointPrior exact(const std::array<Rational, 8>& masses);
  static JointPrior from_doubles(const std::array<double, 8>& masses);
  // Exact masses validated in exact mode (sum == 1) or float mode (sum within
  // kFloatSumTolerance of 1).
  static JointPrior from_rationals(const std::array<Rational, 8>& masses,
                                   bool exact);
  // Uniform over (xi_A, xi_B, xi_W).
  static JointPrior uniform();

  JointPrior() : JointPrior(uniform()) {}

  const Rational& operator()(int xi_a, int xi_b, int xi_w) const {
    return masses_[index(xi_a, xi_b, xi_w)];
  }
  Rational observation_mass(int xi_a, int xi_b) const;
  Rational state_mass(int xi_w) const;

  const std::array<Rational, 8>& masses() const { return masses_; }
  bool is_exact() const { return exact_; }

  friend bool operator==(const JointPrior&, const JointPrior&) = default;

 private:
  JointPrior(std::array<Rational, 8> masses, bool exact)
      : masses_(std::move(masses)), exact_(exact) {}

  std::array<Rational, 8> masses_;
  bool exact_ = true;
};

// Opaque, order-significant labels for the two actions of each agent.
struct ActionLabels {
  std::array<std::string, 2> a{"uA0", "uA1"};
  std::array<std::string, 2> b{"uB0", "uB1"};

  friend bool operator==(const ActionLabels&, const ActionLabels&) = default;
};

class ProblemInstance {
 public:
  // Throws std::invalid_argument when chi < 0.
  ProblemInstance(BinaryCostPair pair, JointPrior prior, Rational chi,
                  ActionLabels labels = {});

  const BinaryCostPair& cost_pair() const { return pair_; }
  const JointPrior& prior() const { return prior_; }
  const Rational& chi() const { return chi_; }
  const ActionLabels& labels() const { return labels_; }

  // [M]_ij for xi_W = 0, chi * [N]_ij for xi_W = 1.
  Rational cost(int i, int j, int xi_w) const;

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;

 private:
  BinaryCostPair pair_;
  JointPrior prior_;
  Rational chi_;
  ActionLabels labels_;
};

ProblemInstance make_instance(const BinaryCostPair& pair,
                              const JointPrior& prior, const Rational& chi);

inline Rational cost(const ProblemInstance& instance, int i, int j, int xi_w) {
  return instance.cost(i, j, xi_w);
}

// Q(u_A, u_B | xi_A, xi_B) as 16 entries.
template <class T>
class BasicPolicy {
 public:
  static constexpr std::size_t index(int u_a, int u_b, int xi_a, int xi_b) {
    return static_cast<std::size_t>(u_a << 3 | u_b << 2 | xi_a << 1 | xi_b);
  }

  BasicPolicy() : q_{} {}
  explicit BasicPolicy(const std::array<T, 16>& entries) : q_(entries) {}

  T& operator()(int u_a, int u_b, int xi_a, int xi_b) {
    return q_[index(u_a, u_b, xi_a, xi_b)];
  }
  const T& operator()(int u_a, int u_b, int xi_a, int xi_b) const {
    return q_[index(u_a, u_b, xi_a, xi_b)];
  }

  const std::array<T, 16>& entries() const { return q_; }

  friend bool operator==(const BasicPolicy&, const BasicPolicy&) = default;

 private:
  std::array<T, 16> q_;
};

using Policy = BasicPolicy<Rational>;
using PolicyF = BasicPolicy<double>;

PolicyF to_float(const Policy& policy);

// Nonnegativity and per-observation normalisation; exact for Policy.
bool is_valid_policy(const Policy& policy);
bool is_valid_policy(const PolicyF& policy, double tol = 1e-12);

// W(u_A, u_B, xi_A, xi_B) = sum_{xi_W} P(xi_A, xi_B, xi_W) l(u_A, u_B, xi_W),
// laid out like a policy so that J(Q) = sum_k W_k Q_k.
std::array<Rational, 16> cost_weights(const ProblemInstance& instance);
std::array<double, 16> cost_weights_f(const ProblemInstance& instance);

Rational expected_cost(const ProblemInstance& instance, const Policy& policy);
double expected_cost(const ProblemInstance& instance, const PolicyF& policy);

struct CentralizedOptimum {
  Rational value;
  // Chosen (u_A, u_B) for each observation pair, indexed xi_A << 1 | xi_B.
  std::array<std::pair<int, int>, 4> argmin{};
};

// Pointwise minimisation over (u_A, u_B) for each observation pair; ties go
// to the lexicographically smallest action pair.
CentralizedOptimum centralized_optimum(const ProblemInstance& instance);

}  // namespace teamq

#endif  // TEAMQ_TEAM_CORE_HPP_
