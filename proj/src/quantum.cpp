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

#include "teamq/quantum.hpp"

#include <cmath>
#include <string>

namespace teamq {

namespace {

// Tr(X Y) without forming the product.
template <std::size_t N>
Complex trace_product(const SquareMatrix<N>& x, const SquareMatrix<N>& y) {
  Complex t{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) t += x(i, j) * y(j, i);
  }
  return t;
}

std::string projector_name(char agent, int xi, int u) {
  return std::string("P^") + agent + "_u" + std::to_string(u) + "(" +
         std::to_string(xi) + ")";
}

StrategyCheck fail(std::string why) { return {false, std::move(why)}; }

StrategyCheck check_family(
    const std::array<std::array<Matrix2c, 2>, 2>& family, char agent,
    double tol) {
  for (int xi = 0; xi < 2; ++xi) {
    for (int u = 0; u < 2; ++u) {
      const Matrix2c& p = family[xi][u];
      auto name = projector_name(agent, xi, u);
      if (!p.is_finite()) return fail(name + " has non-finite entries");
      if (!is_hermitian(p, tol)) return fail(name + " is not Hermitian");
      if ((p * p - p).max_abs() > tol) return fail(name + " is not idempotent");
    }
    if ((family[xi][0] + family[xi][1] - Matrix2c::identity()).max_abs() > tol) {
      return fail(std::string("projectors of agent ") + agent +
                  " at observation " + std::to_string(xi) +
                  " do not sum to the identity");
    }
  }
  return {};
}

}  // namespace

StrategyCheck validate_strategy(const QuantumStrategy& strategy, double tol) {
  const Matrix4c& rho = strategy.rho;
  if (!rho.is_finite()) return fail("rho has non-finite entries");
  if (!is_hermitian(rho, tol)) return fail("rho is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > tol) {
    return fail("rho does not have unit trace");
  }
  if (eigen_hermitian(rho).values[0] < -tol) {
    return fail("rho is not positive semidefinite");
  }
  if (auto a = check_family(strategy.proj_a, 'A', tol); !a) return a;
  return check_family(strategy.proj_b, 'B', tol);
}

PolicyF occupation_measure(const QuantumStrategy& strategy) {
  PolicyF policy;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      for (int ua = 0; ua < 2; ++ua) {
        for (int ub = 0; ub < 2; ++ub) {
          Matrix4c joint = kron(strategy.proj_a[xa][ua], strategy.proj_b[xb][ub]);
          policy(ua, ub, xa, xb) = trace_product(joint, strategy.rho).real();
        }
      }
    }
  }
  return policy;
}

double quantum_cost(const ProblemInstance& instance,
                    const QuantumStrategy& strategy) {
  return expected_cost(instance, occupation_measure(strategy));
}

QuantumStrategy embed_deterministic(const DeterministicLabel& label) {
  QuantumStrategy s;
  s.rho = Matrix4c::identity() * Complex(0.25);
  for (int xi = 0; xi < 2; ++xi) {
    for (int u = 0; u < 2; ++u) {
      if (label.action_a(xi) == u) s.proj_a[xi][u] = Matrix2c::identity();
      if (label.action_b(xi) == u) s.proj_b[xi][u] = Matrix2c::identity();
    }
  }
  return s;
}

Matrix2c bloch_projector(double theta, double phi) {
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  Matrix2c p;
  p(0, 0) = 0.5 * (1.0 + nz);
  p(0, 1) = 0.5 * Complex(nx, -ny);
  p(1, 0) = 0.5 * Complex(nx, ny);
  p(1, 1) = 0.5 * (1.0 - nz);
  return p;
}

Matrix2c phased_matrix(double lambda, double a, double b, Complex phase) {
  Matrix2c p;
  p(0, 0) = a / lambda;
  p(0, 1) = std::conj(phase) / lambda;
  p(1, 0) = phase / lambda;
  p(1, 1) = b / lambda;
  return p;
}

QuantumStrategy transport_strategy(const QuantumStrategy& strategy,
                                   GroupAction action) {
  QuantumStrategy out = strategy;
  switch (action) {
    case GroupAction::kIdentity:
    case GroupAction::kExchange:
      break;
    case GroupAction::kTranspose:
      out.rho = swap_factors(strategy.rho);
      out.proj_a = strategy.proj_b;
      out.proj_b = strategy.proj_a;
      break;
    case GroupAction::kRowSwap:
      for (int xi = 0; xi < 2; ++xi) {
        out.proj_a[xi] = {strategy.proj_a[xi][1], strategy.proj_a[xi][0]};
      }
      break;
    case GroupAction::kColSwap:
      for (int xi = 0; xi < 2; ++xi) {
        out.proj_b[xi] = {strategy.proj_b[xi][1], strategy.proj_b[xi][0]};
      }
      break;
  }
  return out;
}

Witness half_cac_witness() {
  std::array<Rational, 8> masses;
  masses.fill(0);
  masses[JointPrior::index(0, 0, 1)] = make_rational(1, 5);
  masses[JointPrior::index(0, 1, 1)] = make_rational(1, 5);
  masses[JointPrior::index(1, 0, 1)] = make_rational(1, 5);
  masses[JointPrior::index(1, 1, 0)] = make_rational(2, 5);
  ProblemInstance instance(half_cac_form(), JointPrior::exact(masses),
                           Rational(2));

  const double sqrt3 = std::sqrt(3.0);
  // e^{i pi/3}, e^{-i pi/3}, e^{2 i pi/3}
  const Complex plus_third(0.5, 0.5 * sqrt3);
  const Complex minus_third(0.5, -0.5 * sqrt3);
  const Complex plus_two_thirds(-0.5, 0.5 * sqrt3);

  QuantumStrategy s;
  s.rho(0, 0) = 0.25;
  s.rho(0, 3) = 0.25 * sqrt3;
  s.rho(3, 0) = 0.25 * sqrt3;
  s.rho(3, 3) = 0.75;

  const Matrix2c id = Matrix2c::identity();
  s.proj_a[0][0](0, 0) = 1.0;
  s.proj_a[1][0] = phased_matrix(2.0, 1.0, 1.0, plus_third);
  // The B projector at observation 0 carries phase 2 pi / 3; with pi / 3 the
  // conditionals at (xi_A, xi_B) = (1, 0) change and the cost rises above
  // the local optimum.
  s.proj_b[0][0] = phased_matrix(4.0, 2.0 - sqrt3, 2.0 + sqrt3, plus_two_thirds);
  s.proj_b[1][0] = phased_matrix(4.0, 2.0 - sqrt3, 2.0 + sqrt3, minus_third);
  for (int xi = 0; xi < 2; ++xi) {
    s.proj_a[xi][1] = id - s.proj_a[xi][0];
    s.proj_b[xi][1] = id - s.proj_b[xi][0];
  }
  return {std::move(instance), std::move(s)};
}

}  // namespace teamq
