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

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "teamq/polytopes.hpp"
#include "teamq/team_core.hpp"

using namespace teamq;
using teamq::testing::q;

namespace {

const BinaryCostPair kCac({{{-1, 0}, {0, -1}}}, {{{0, -1}, {-1, 0}}});
const BinaryCostPair kHalfCac({{{-1, 0}, {0, 0}}}, {{{0, -1}, {-1, 0}}});

ProblemInstance witness_instance() {
  std::array<Rational, 8> p;
  for (auto& x : p) x = 0;
  p[JointPrior::index(0, 0, 1)] = q(1, 5);
  p[JointPrior::index(0, 1, 1)] = q(1, 5);
  p[JointPrior::index(1, 0, 1)] = q(1, 5);
  p[JointPrior::index(1, 1, 0)] = q(2, 5);
  return make_instance(kHalfCac, JointPrior::exact(p), q(2));
}

// Straight 32-term sum, written independently of cost_weights.
Rational direct_cost(const ProblemInstance& d, const Policy& policy) {
  Rational total = 0;
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb)
      for (int xw = 0; xw < 2; ++xw)
        for (int ua = 0; ua < 2; ++ua)
          for (int ub = 0; ub < 2; ++ub) {
            int entry = xw == 0 ? d.cost_pair().m()[ua][ub]
                                : d.cost_pair().n()[ua][ub];
            Rational l = xw == 0 ? Rational(entry) : Rational(d.chi() * entry);
            total += d.prior()(xa, xb, xw) * l * policy(ua, ub, xa, xb);
          }
  return total;
}

// Minimum over all 4^4 deterministic centralized maps.
Rational brute_force_central(const ProblemInstance& d) {
  std::optional<Rational> best;
  for (int map = 0; map < 256; ++map) {
    Policy p;
    for (int obs = 0; obs < 4; ++obs) {
      int pair = map >> (2 * obs) & 3;
      p(pair >> 1, pair & 1, obs >> 1, obs & 1) = 1;
    }
    Rational c = direct_cost(d, p);
    if (!best || c < *best) best = c;
  }
  return *best;
}

}  // namespace

TEST_CASE("cost pairs accept only 0 and -1 entries") {
  CHECK_THROWS_AS(BinaryCostPair({{{1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BinaryCostPair({{{0, 0}, {0, 0}}}, {{{0, -2}, {0, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BinaryCostPair::from_code(256), std::out_of_range);
}

TEST_CASE("codes enumerate 256 distinct pairs and round-trip") {
  std::vector<BinaryCostPair> pairs;
  for (unsigned c = 0; c < 256; ++c) {
    auto p = BinaryCostPair::from_code(c);
    CHECK(p.code() == c);
    pairs.push_back(p);
  }
  std::sort(pairs.begin(), pairs.end());
  CHECK(std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end());
  // Bit k of a mask is entry (k / 2, k % 2).
  CHECK(matrix_mask({{{-1, 0}, {0, 0}}}) == 1u);
  CHECK(matrix_mask({{{0, -1}, {0, 0}}}) == 2u);
  CHECK(matrix_mask({{{0, 0}, {0, -1}}}) == 8u);
  CHECK(kCac.code() == (9u << 4 | 6u));
}

TEST_CASE("priors validate masses") {
  std::array<Rational, 8> p;
  for (auto& x : p) x = q(1, 8);
  CHECK(JointPrior::exact(p) == JointPrior::uniform());
  p[0] = q(1, 7);
  CHECK_THROWS_AS(JointPrior::exact(p), std::invalid_argument);
  p[0] = q(3, 8);
  p[1] = q(-1, 8);
  CHECK_THROWS_AS(JointPrior::exact(p), std::invalid_argument);

  std::array<double, 8> f;
  f.fill(0.125);
  f[0] += 1e-13;
  auto prior = JointPrior::from_doubles(f);
  CHECK_FALSE(prior.is_exact());
  f[0] += 1e-9;
  CHECK_THROWS_AS(JointPrior::from_doubles(f), std::invalid_argument);

  auto u = JointPrior::uniform();
  CHECK(u.observation_mass(1, 0) == q(1, 4));
  CHECK(u.state_mass(1) == q(1, 2));
}

TEST_CASE("instances reject negative chi") {
  CHECK_THROWS_AS(make_instance(kCac, JointPrior::uniform(), q(-1)),
                  std::invalid_argument);
  CHECK_NOTHROW(make_instance(kCac, JointPrior::uniform(), q(0)));
}

TEST_CASE("cost lookups follow the matrices") {
  auto cac = make_instance(kCac, JointPrior::uniform(), q(3, 4));
  CHECK(cost(cac, 0, 1, 1) == q(-3, 4));
  CHECK(cost(cac, 0, 0, 0) == -1);
  CHECK(cost(cac, 0, 1, 0) == 0);
  CHECK(cost(cac, 1, 1, 1) == 0);

  auto half = make_instance(kHalfCac, JointPrior::uniform(), q(2));
  CHECK(cost(half, 1, 0, 1) == -2);

  auto zero_chi = make_instance(kCac, JointPrior::uniform(), q(0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(cost(zero_chi, i, j, 1) == 0);
}

TEST_CASE("expected cost of witness-instance policies") {
  auto d = witness_instance();
  // gamma_A = u_A^0, gamma_B = u_B^1 everywhere.
  Policy boxed;
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb) boxed(0, 1, xa, xb) = 1;
  CHECK(expected_cost(d, boxed) == q(-6, 5));

  // gamma_A(0) = u_A^1, gamma_A(1) = u_A^0, gamma_B = u_B^0.
  Policy row2;
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb) row2(xa == 0 ? 1 : 0, 0, xa, xb) = 1;
  CHECK(expected_cost(d, row2) == q(-6, 5));

  auto zero = make_instance(BinaryCostPair::from_code(0), JointPrior::uniform(), q(1));
  CHECK(expected_cost(zero, boxed) == 0);
}

TEST_CASE("expected cost matches the direct sum on random inputs") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto d = testing::random_instance(rng);
    auto p = testing::random_policy(rng);
    REQUIRE(is_valid_policy(p));
    CHECK(expected_cost(d, p) == direct_cost(d, p));
    CHECK(expected_cost(d, to_float(p)) ==
          doctest::Approx(to_double(direct_cost(d, p))).epsilon(1e-12));
  }
}

TEST_CASE("expected cost is linear in the policy") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    auto d = testing::random_instance(rng);
    auto p1 = to_float(testing::random_policy(rng));
    auto p2 = to_float(testing::random_policy(rng));
    double a = std::uniform_real_distribution<double>(0, 1)(rng);
    PolicyF mix;
    for (int i = 0; i < 16; ++i) {
      mix(i >> 3, i >> 2 & 1, i >> 1 & 1, i & 1) =
          a * p1(i >> 3, i >> 2 & 1, i >> 1 & 1, i & 1) +
          (1 - a) * p2(i >> 3, i >> 2 & 1, i >> 1 & 1, i & 1);
    }
    double lhs = expected_cost(d, mix);
    double rhs = a * expected_cost(d, p1) + (1 - a) * expected_cost(d, p2);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("policies on zero-mass observations do not affect the cost") {
  std::array<Rational, 8> p;
  for (auto& x : p) x = 0;
  p[JointPrior::index(0, 0, 0)] = q(1, 2);
  p[JointPrior::index(1, 1, 1)] = q(1, 2);
  auto d = make_instance(kCac, JointPrior::exact(p), q(1));
  std::mt19937_64 rng(13);
  auto base = testing::random_policy(rng);
  auto other = base;
  for (int ua = 0; ua < 2; ++ua)
    for (int ub = 0; ub < 2; ++ub) other(ua, ub, 0, 1) = ua == ub ? q(1, 2) : q(0);
  CHECK(expected_cost(d, base) == expected_cost(d, other));
}

TEST_CASE("validity of policies") {
  Policy p;
  CHECK_FALSE(is_valid_policy(p));
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb) p(1, 1, xa, xb) = 1;
  CHECK(is_valid_policy(p));
  p(0, 0, 0, 0) = q(-1, 10);
  p(1, 1, 0, 0) = q(11, 10);
  CHECK_FALSE(is_valid_policy(p));
  CHECK_FALSE(is_valid_policy(to_float(p)));
}

TEST_CASE("centralized optimum") {
  SUBCASE("dominant shared action") {
    std::mt19937_64 rng(14);
    BinaryCostPair shared({{{-1, 0}, {0, 0}}}, {{{-1, 0}, {0, 0}}});
    for (int k = 0; k < 20; ++k) {
      auto d = ProblemInstance(shared, sample_prior(rng), q(1));
      auto c = centralized_optimum(d);
      CHECK(c.value == -1);
      for (auto a : c.argmin) CHECK(a == std::pair{0, 0});
    }
  }
  SUBCASE("zero costs tie-break to the first action pair") {
    auto d = make_instance(BinaryCostPair::from_code(0), JointPrior::uniform(), q(1));
    auto c = centralized_optimum(d);
    CHECK(c.value == 0);
    for (auto a : c.argmin) CHECK(a == std::pair{0, 0});
  }
  SUBCASE("witness instance agrees with the 4^4 brute force") {
    auto d = witness_instance();
    CHECK(centralized_optimum(d).value == brute_force_central(d));
    CHECK(centralized_optimum(d).value == q(-8, 5));
  }
  SUBCASE("random instances agree with the brute force and bound every policy") {
    std::mt19937_64 rng(15);
    for (int k = 0; k < 100; ++k) {
      auto d = testing::random_instance(rng);
      auto c = centralized_optimum(d);
      CHECK(c.value == brute_force_central(d));
      CHECK(c.value <= expected_cost(d, testing::random_policy(rng)));
      CHECK(c.value <= local_optimum(d).value);
    }
  }
}
