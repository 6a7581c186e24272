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

#ifndef TEAMQ_TESTS_SUPPORT_HPP_
#define TEAMQ_TESTS_SUPPORT_HPP_

// Random inputs and small helpers shared by the unit tests.

#include <array>
#include <cmath>
#include <random>

#include "teamq/rational.hpp"
#include "teamq/superstructure.hpp"
#include "teamq/team_core.hpp"
#include "teamq/verification.hpp"

namespace teamq::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline BinaryCostPair pair_of(CostMatrix m, CostMatrix n) { return {m, n}; }

// Rational policy: each observation gets an independent point of the
// 3-simplex with denominator 60.
inline Policy random_policy(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> cut(0, 60);
  Policy p;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      std::array<long, 5> c = {0, cut(rng), cut(rng), cut(rng), 60};
      std::sort(c.begin() + 1, c.begin() + 4);
      for (int k = 0; k < 4; ++k) {
        p(k >> 1, k & 1, xa, xb) = make_rational(c[k + 1] - c[k], 60);
      }
    }
  }
  return p;
}

inline ProblemInstance random_instance(std::mt19937_64& rng,
                                       const BinaryCostPair& pair) {
  std::uniform_int_distribution<long> chi(1, 400);
  return ProblemInstance(pair, sample_prior(rng), make_rational(chi(rng), 100));
}

inline ProblemInstance random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> code(0, 255);
  return random_instance(rng, BinaryCostPair::from_code(code(rng)));
}

}  // namespace teamq::testing

#endif  // TEAMQ_TESTS_SUPPORT_HPP_
