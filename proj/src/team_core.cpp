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

#include "teamq/team_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace teamq {

namespace {

void check_matrix(const CostMatrix& matrix, const char* name) {
  for (const auto& row : matrix) {
    for (int entry : row) {
      if (entry != 0 && entry != -1) {
        throw std::invalid_argument(std::string("cost matrix ") + name +
                                    " has entry " + std::to_string(entry) +
                                    " outside {0, -1}");
      }
    }
  }
}

}  // namespace

BinaryCostPair::BinaryCostPair(const CostMatrix& m, const CostMatrix& n)
    : m_(m), n_(n) {
  check_matrix(m_, "M");
  check_matrix(n_, "N");
}

unsigned matrix_mask(const CostMatrix& matrix) {
  unsigned mask = 0;
  for (unsigned k = 0; k < 4; ++k) {
    if (matrix[k / 2][k % 2] == -1) mask |= 1u << k;
  }
  return mask;
}

CostMatrix matrix_from_mask(unsigned mask) {
  CostMatrix matrix{};
  for (unsigned k = 0; k < 4; ++k) {
    matrix[k / 2][k % 2] = (mask >> k & 1u) ? -1 : 0;
  }
  return matrix;
}

BinaryCostPair BinaryCostPair::from_code(unsigned code) {
  if (code > 255) throw std::out_of_range("cost pair code exceeds 255");
  return BinaryCostPair(matrix_from_mask(code >> 4), matrix_from_mask(code & 15u));
}

unsigned BinaryCostPair::code() const {
  return matrix_mask(m_) << 4 | matrix_mask(n_);
}

JointPrior JointPrior::exact(const std::array<Rational, 8>& masses) {
  return from_rationals(masses, true);
}

JointPrior JointPrior::from_rationals(const std::array<Rational, 8>& masses,
                                      bool exact) {
  Rational total = 0;
  for (const auto& p : masses) {
    if (p < 0) throw std::invalid_argument("prior has a negative entry");
    total += p;
  }
  bool ok = exact ? total == 1
                  : std::abs(total.get_d() - 1.0) <= kFloatSumTolerance;
  if (!ok) {
    throw std::invalid_argument("prior sums to " + to_string(total) +
                                ", not 1");
  }
  return JointPrior(masses, exact);
}

JointPrior JointPrior::from_doubles(const std::array<double, 8>& masses) {
  std::array<Rational, 8> exact_masses;
  double total = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    if (!std::isfinite(masses[k]) || masses[k] < 0.0) {
      throw std::invalid_argument("prior has a negative or non-finite entry");
    }
    exact_masses[k] = rational_from_double(masses[k]);
    total += masses[k];
  }
  if (std::abs(total - 1.0) > kFloatSumTolerance) {
    throw std::invalid_argument("prior sums to " + std::to_string(total) +
                                ", not 1");
  }
  return JointPrior(std::move(exact_masses), false);
}

JointPrior JointPrior::uniform() {
  std::array<Rational, 8> masses;
  masses.fill(make_rational(1, 8));
  return JointPrior(std::move(masses), true);
}

Rational JointPrior::observation_mass(int xi_a, int xi_b) const {
  return (*this)(xi_a, xi_b, 0) + (*this)(xi_a, xi_b, 1);
}

Rational JointPrior::state_mass(int xi_w) const {
  Rational total = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) total += (*this)(a, b, xi_w);
  }
  return total;
}

ProblemInstance::ProblemInstance(BinaryCostPair pair, JointPrior prior,
                                 Rational chi, ActionLabels labels)
    : pair_(std::move(pair)),
      prior_(std::move(prior)),
      chi_(std::move(chi)),
      labels_(std::move(labels)) {
  if (chi_ < 0) throw std::invalid_argument("chi must be nonnegative");
}

Rational ProblemInstance::cost(int i, int j, int xi_w) const {
  if (xi_w == 0) return Rational(pair_.m()[i][j]);
  return chi_ * pair_.n()[i][j];
}

ProblemInstance make_instance(const BinaryCostPair& pair,
                              const JointPrior& prior, const Rational& chi) {
  return ProblemInstance(pair, prior, chi);
}

PolicyF to_float(const Policy& policy) {
  std::array<double, 16> entries;
  for (std::size_t k = 0; k < 16; ++k) entries[k] = policy.entries()[k].get_d();
  return PolicyF(entries);
}

bool is_valid_policy(const Policy& policy) {
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      Rational total = 0;
      for (int ua = 0; ua < 2; ++ua) {
        for (int ub = 0; ub < 2; ++ub) {
          const Rational& q = policy(ua, ub, xa, xb);
          if (q < 0) return false;
          total += q;
        }
      }
      if (total != 1) return false;
    }
  }
  return true;
}

bool is_valid_policy(const PolicyF& policy, double tol) {
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      double total = 0.0;
      for (int ua = 0; ua < 2; ++ua) {
        for (int ub = 0; ub < 2; ++ub) {
          double q = policy(ua, ub, xa, xb);
          if (!std::isfinite(q) || q < -tol) return false;
          total += q;
        }
      }
      if (std::abs(total - 1.0) > tol) return false;
    }
  }
  return true;
}

std::array<Rational, 16> cost_weights(const ProblemInstance& instance) {
  const auto& m = instance.cost_pair().m();
  const auto& n = instance.cost_pair().n();
  const auto& prior = instance.prior();
  std::array<Rational, 16> weights;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      Rational scaled_p1 = instance.chi() * prior(xa, xb, 1);
      for (int ua = 0; ua < 2; ++ua) {
        for (int ub = 0; ub < 2; ++ub) {
          Rational& w = weights[Policy::index(ua, ub, xa, xb)];
          w = 0;
          if (m[ua][ub] != 0) w -= prior(xa, xb, 0);
          if (n[ua][ub] != 0) w -= scaled_p1;
        }
      }
    }
  }
  return weights;
}

std::array<double, 16> cost_weights_f(const ProblemInstance& instance) {
  auto exact = cost_weights(instance);
  std::array<double, 16> weights;
  for (std::size_t k = 0; k < 16; ++k) weights[k] = exact[k].get_d();
  return weights;
}

Rational expected_cost(const ProblemInstance& instance, const Policy& policy) {
  auto weights = cost_weights(instance);
  Rational total = 0;
  for (std::size_t k = 0; k < 16; ++k) {
    if (policy.entries()[k] != 0) total += weights[k] * policy.entries()[k];
  }
  return total;
}

double expected_cost(const ProblemInstance& instance, const PolicyF& policy) {
  auto weights = cost_weights_f(instance);
  double total = 0.0;
  for (std::size_t k = 0; k < 16; ++k) total += weights[k] * policy.entries()[k];
  return total;
}

CentralizedOptimum centralized_optimum(const ProblemInstance& instance) {
  auto weights = cost_weights(instance);
  CentralizedOptimum result;
  result.value = 0;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      std::pair<int, int> best{0, 0};
      Rational best_value = weights[Policy::index(0, 0, xa, xb)];
      for (int ua = 0; ua < 2; ++ua) {
        for (int ub = 0; ub < 2; ++ub) {
          const Rational& w = weights[Policy::index(ua, ub, xa, xb)];
          if (w < best_value) {
            best_value = w;
            best = {ua, ub};
          }
        }
      }
      result.value += best_value;
      result.argmin[static_cast<std::size_t>(xa << 1 | xb)] = best;
    }
  }
  return result;
}

}  // namespace teamq
