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

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "teamq/linalg.hpp"
#include "teamq/polytopes.hpp"
#include "teamq/quantum.hpp"

using namespace teamq;
using teamq::testing::q;

namespace {

const double kSqrt3 = std::sqrt(3.0);
constexpr double kPi = std::numbers::pi;

template <std::size_t N>
SquareMatrix<N> random_hermitian(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  SquareMatrix<N> a;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a + a.adjoint();
}

Matrix4c random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix4c a;
  // Rank 1 to 4: zero some columns.
  int rank = std::uniform_int_distribution<int>(1, 4)(rng);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(rank); ++j)
      a(i, j) = Complex(g(rng), g(rng));
  Matrix4c rho = a * a.adjoint();
  return rho * Complex(1.0 / rho.trace().real());
}

QuantumStrategy random_strategy(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  QuantumStrategy s;
  s.rho = random_density(rng);
  auto projector = [&] {
    double r = u(rng);
    if (r < 0.05) return Matrix2c::identity();
    if (r < 0.10) return Matrix2c{};
    return bloch_projector(std::acos(1 - 2 * u(rng)), 2 * kPi * u(rng));
  };
  for (int xi = 0; xi < 2; ++xi) {
    s.proj_a[xi][0] = projector();
    s.proj_b[xi][0] = projector();
    s.proj_a[xi][1] = Matrix2c::identity() - s.proj_a[xi][0];
    s.proj_b[xi][1] = Matrix2c::identity() - s.proj_b[xi][0];
  }
  return s;
}

// Uniform observations, xi_W = xi_A xi_B, CAC costs with chi = 1; here
// J = -(1/2 + S/8).
ProblemInstance chsh_instance() {
  std::array<Rational, 8> p;
  for (auto& x : p) x = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) p[JointPrior::index(a, b, a & b)] = q(1, 4);
  return ProblemInstance(cac_form(), JointPrior::exact(p), q(1));
}

template <std::size_t N>
Eigen::Matrix<std::complex<double>, N, N> to_eigen(const SquareMatrix<N>& m) {
  Eigen::Matrix<std::complex<double>, N, N> e;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) e(i, j) = m(i, j);
  return e;
}

template <std::size_t N>
void check_eigen(std::mt19937_64& rng) {
  for (int k = 0; k < 200; ++k) {
    auto h = random_hermitian<N>(rng);
    auto mine = eigen_hermitian(h);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<std::complex<double>, N, N>> oracle(
        to_eigen(h));
    for (std::size_t i = 0; i < N; ++i) {
      CHECK(mine.values[i] == doctest::Approx(oracle.eigenvalues()(i)).epsilon(1e-10));
    }
    // H V = V diag(lambda), V unitary.
    SquareMatrix<N> diag;
    for (std::size_t i = 0; i < N; ++i) diag(i, i) = mine.values[i];
    CHECK((h * mine.vectors - mine.vectors * diag).max_abs() <= 1e-9 * (1 + h.max_abs()));
    CHECK((mine.vectors.adjoint() * mine.vectors - SquareMatrix<N>::identity()).max_abs() <=
          1e-10);
  }
}

}  // namespace

TEST_CASE("Hermitian eigensolvers agree with Eigen") {
  std::mt19937_64 rng(41);
  check_eigen<2>(rng);
  check_eigen<4>(rng);
  // Degenerate and diagonal inputs.
  auto id = eigen_hermitian(Matrix4c::identity());
  for (double v : id.values) CHECK(v == doctest::Approx(1.0));
  Matrix2c d;
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  auto e = eigen_hermitian(d);
  CHECK(e.values[0] == doctest::Approx(-1.0));
  CHECK(e.values[1] == doctest::Approx(3.0));
}

TEST_CASE("tensor helpers") {
  std::mt19937_64 rng(42);
  auto a = random_hermitian<2>(rng);
  auto b = random_hermitian<2>(rng);
  auto ab = kron(a, b);
  CHECK((to_eigen(ab) - Eigen::kroneckerProduct(to_eigen(a), to_eigen(b)).eval()).norm() <
        1e-12);
  CHECK((partial_trace_b(ab) - a * b.trace()).max_abs() < 1e-12);
  CHECK((partial_trace_a(ab) - b * a.trace()).max_abs() < 1e-12);
  CHECK((swap_factors(ab) - kron(b, a)).max_abs() < 1e-12);
}

TEST_CASE("projector builders") {
  Matrix2c north;
  north(0, 0) = 1.0;
  Matrix2c south;
  south(1, 1) = 1.0;
  CHECK((bloch_projector(0, 0) - north).max_abs() < 1e-15);
  CHECK((bloch_projector(kPi, 0.7) - south).max_abs() < 1e-15);
  auto witness_a1 = phased_matrix(2, 1, 1, std::polar(1.0, kPi / 3));
  CHECK((bloch_projector(kPi / 2, kPi / 3) - witness_a1).max_abs() < 1e-15);

  for (double theta : {kPi / 3, -kPi / 3, 2 * kPi / 3}) {
    auto p = phased_matrix(4, 2 - kSqrt3, 2 + kSqrt3, std::polar(1.0, theta));
    CHECK((p * p - p).max_abs() < 1e-15);
    CHECK(is_hermitian(p, 0.0));
  }
}

TEST_CASE("strategy validation") {
  auto [instance, witness] = half_cac_witness();
  CHECK(validate_strategy(witness));

  QuantumStrategy trivial;
  trivial.rho = Matrix4c::identity() * Complex(0.25);
  for (int xi = 0; xi < 2; ++xi) {
    trivial.proj_a[xi] = {Matrix2c::identity(), Matrix2c{}};
    trivial.proj_b[xi] = {Matrix2c{}, Matrix2c::identity()};
  }
  CHECK(validate_strategy(trivial));

  auto bad = trivial;
  bad.rho = Matrix4c::identity() * Complex(0.3);
  auto r = validate_strategy(bad);
  CHECK_FALSE(r);
  CHECK_FALSE(r.failure.empty());

  bad = trivial;
  bad.rho = Matrix4c{};
  bad.rho(0, 0) = 1.5;
  bad.rho(1, 1) = -0.5;
  CHECK_FALSE(validate_strategy(bad));

  bad = trivial;
  bad.proj_a[1][0] = Matrix2c::identity() * Complex(0.5);
  bad.proj_a[1][1] = Matrix2c::identity() * Complex(0.5);
  CHECK_FALSE(validate_strategy(bad));

  bad = trivial;
  bad.proj_b[0][1] = Matrix2c{};
  CHECK_FALSE(validate_strategy(bad));

  bad = trivial;
  bad.rho(0, 1) = Complex(0.0, 0.1);
  CHECK_FALSE(validate_strategy(bad));
}

TEST_CASE("witness occupation measure and cost") {
  auto [d, s] = half_cac_witness();
  auto Q = occupation_measure(s);
  const double c = kSqrt3 + 2;
  CHECK(std::abs(Q(0, 0, 1, 1) - c / 8) < 1e-10);
  CHECK(std::abs(Q(0, 1, 0, 0) - c / 16) < 1e-10);
  CHECK(std::abs(Q(1, 0, 0, 0) - 3 * c / 16) < 1e-10);
  CHECK(std::abs(Q(0, 1, 0, 1) - c / 16) < 1e-10);
  CHECK(std::abs(Q(1, 0, 0, 1) - 3 * c / 16) < 1e-10);
  CHECK(std::abs(Q(0, 1, 1, 0) - 0.25) < 1e-10);
  CHECK(std::abs(Q(1, 0, 1, 0) - c / 8) < 1e-10);
  CHECK(is_valid_policy(Q, 1e-12));
  CHECK(is_no_signalling(Q, 1e-9));

  double cost = quantum_cost(d, s);
  CHECK(std::abs(cost - (-7 - 3 * kSqrt3) / 10) < 1e-10);
  CHECK(std::abs(cost - kHalfCacWitnessCost) < 1e-12);
  CHECK(std::abs(cost - expected_cost(d, Q)) < 1e-10);
  CHECK(to_double(local_optimum(d).value) - cost >= 0.019);
}

TEST_CASE("the B projector with phase pi/3 does not reach the local optimum") {
  auto [d, s] = half_cac_witness();
  s.proj_b[0][0] = phased_matrix(4, 2 - kSqrt3, 2 + kSqrt3, std::polar(1.0, kPi / 3));
  s.proj_b[0][1] = Matrix2c::identity() - s.proj_b[0][0];
  CHECK(validate_strategy(s));
  double cost = quantum_cost(d, s);
  CHECK(cost == doctest::Approx(-1.1763139720814413).epsilon(1e-12));
  CHECK(cost > -1.2);
}

TEST_CASE("embedded deterministic strategies reproduce their vertices") {
  for (const auto& label : all_deterministic_labels()) {
    auto s = embed_deterministic(label);
    CHECK(validate_strategy(s));
    CHECK(occupation_measure(s) == to_float(deterministic_vertex(label)));
  }
  auto [d, unused] = half_cac_witness();
  auto best = embed_deterministic(local_optimum(d).argmin);
  CHECK(quantum_cost(d, best) == doctest::Approx(-1.2));

  ProblemInstance zero(BinaryCostPair::from_code(0), JointPrior::uniform(), q(1));
  CHECK(quantum_cost(zero, best) == 0.0);
}

TEST_CASE("random quantum strategies stay inside the no-signalling polytope") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 1000; ++k) {
    auto s = random_strategy(rng);
    REQUIRE(validate_strategy(s));
    auto Q = occupation_measure(s);
    CHECK(is_valid_policy(Q, 1e-10));
    CHECK(is_no_signalling(Q, 1e-9));
    auto d = testing::random_instance(rng);
    CHECK(quantum_cost(d, s) >= to_double(ns_optimum(d).value) - 1e-8);
  }
}

TEST_CASE("strategy transport follows instance transport") {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 100; ++k) {
    auto s = random_strategy(rng);
    auto d = testing::random_instance(rng);
    for (auto a : {GroupAction::kIdentity, GroupAction::kTranspose, GroupAction::kRowSwap,
                   GroupAction::kColSwap, GroupAction::kExchange}) {
      auto moved = transport_strategy(s, a);
      CHECK(validate_strategy(moved));
      double before = quantum_cost(d, s);
      double after = quantum_cost(transport_instance(d, a), moved);
      double expected = a == GroupAction::kExchange ? before / to_double(d.chi()) : before;
      CHECK(std::abs(after - expected) < 1e-10);
    }
  }
}

TEST_CASE("see-saw") {
  SUBCASE("zero costs") {
    ProblemInstance zero(BinaryCostPair::from_code(0), JointPrior::uniform(), q(1));
    auto r = seesaw_optimize(zero, 4, 50, 0);
    CHECK(r.value == doctest::Approx(0.0));
  }
  SUBCASE("half-CAC witness instance") {
    auto [d, unused] = half_cac_witness();
    auto r = seesaw_optimize(d, 32, 500, 0);
    CHECK(r.value <= -1.219);
    CHECK(validate_strategy(r.strategy));
    CHECK(std::abs(quantum_cost(d, r.strategy) - r.value) < 1e-10);
    CHECK(r.value >= to_double(ns_optimum(d).value) - 1e-8);
    CHECK(r.max_step_increase <= 1e-10);
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] <= r.trace[i - 1] + 1e-10);

    auto again = seesaw_optimize(d, 32, 500, 0);
    CHECK(again.value == r.value);
    CHECK(again.best_restart == r.best_restart);
    SeesawOptions serial;
    serial.threads = 1;
    CHECK(seesaw_optimize(d, serial).value == r.value);
  }
  SUBCASE("CHSH objective reaches the Tsirelson value") {
    auto d = chsh_instance();
    auto r = seesaw_optimize(d, 32, 500, 7);
    double s = chsh_value(occupation_measure(r.strategy));
    CHECK(std::abs(s) >= 2 * std::numbers::sqrt2 - 1e-3);
    CHECK(r.value == doctest::Approx(-(0.5 + std::numbers::sqrt2 / 4)).epsilon(1e-6));
    CHECK(to_double(local_optimum(d).value) == doctest::Approx(-0.75));
  }
}
