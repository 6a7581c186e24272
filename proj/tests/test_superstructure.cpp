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
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "teamq/polytopes.hpp"
#include "teamq/superstructure.hpp"

using namespace teamq;
using teamq::testing::q;

namespace {

long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int count_in(const std::vector<BinaryCostPair>& members, int m, int n) {
  return static_cast<int>(std::count_if(members.begin(), members.end(), [&](const auto& p) {
    return mn_signature(p) == MnSignature{m, n};
  }));
}

constexpr std::array<GroupAction, 5> kAll = {
    GroupAction::kIdentity, GroupAction::kTranspose, GroupAction::kRowSwap,
    GroupAction::kColSwap, GroupAction::kExchange};

}  // namespace

TEST_CASE("action names round-trip") {
  for (auto a : kAll) CHECK(parse_group_action(to_string(a)) == a);
  CHECK_THROWS_AS(parse_group_action("X"), std::invalid_argument);
  for (int v = 0; v < 7; ++v) {
    auto verdict = static_cast<Verdict>(v);
    CHECK(parse_verdict(to_string(verdict)) == verdict);
  }
}

TEST_CASE("enumeration and m-n counting") {
  auto classes = enumerate_classes();
  REQUIRE(classes.size() == 256);
  CHECK(std::set<BinaryCostPair>(classes.begin(), classes.end()).size() == 256);
  std::map<std::pair<int, int>, long> sizes, overlapping;
  for (const auto& p : classes) {
    auto mn = mn_signature(p);
    ++sizes[{mn.m, mn.n}];
    if (is_overlapping(p)) ++overlapping[{mn.m, mn.n}];
  }
  CHECK(sizes[{0, 0}] == 1);
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(sizes[{m, n}] == choose(4, m) * choose(4, n));
      long closed_form = 0;
      for (int k = 1; k <= n; ++k) closed_form += choose(m, k) * choose(4 - m, n - k);
      CHECK(overlapping[{m, n}] == choose(4, m) * closed_form);
    }
  }
}

TEST_CASE("signatures and cells") {
  CHECK(mn_signature(cac_form()) == MnSignature{2, 2});
  CHECK(mn_signature(half_cac_form()) == MnSignature{1, 2});
  CHECK(mn_signature(BinaryCostPair::from_code(0)) == MnSignature{0, 0});

  CHECK(classify_cell(BinaryCostPair({{{0, -1}, {0, 0}}}, {{{0, -1}, {0, 0}}})) ==
        Cell::kOverlapping);
  CHECK(classify_cell(family_generator(VertexBoundFamily::kC11a)) == Cell::kAchiral);
  CHECK(classify_cell(half_cac_form()) == Cell::kChiral);
  CHECK(classify_cell(cac_form()) == Cell::kChiral);
  for (const auto& p : enumerate_classes()) {
    bool shared = false;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) shared |= p.m()[i][j] == -1 && p.n()[i][j] == -1;
    CHECK(is_overlapping(p) == shared);
    CHECK((classify_cell(p) == Cell::kOverlapping) == shared);
  }
}

TEST_CASE("actions act on the matrices") {
  auto ex = apply_action(cac_form(), GroupAction::kExchange);
  CHECK(ex.m() == cac_form().n());
  CHECK(ex.n() == cac_form().m());
  CHECK(mn_signature(ex) == MnSignature{2, 2});

  auto r = apply_action(half_cac_form(), GroupAction::kRowSwap);
  CHECK(r.m() == CostMatrix{{{0, 0}, {-1, 0}}});
  CHECK(r.n() == CostMatrix{{{-1, 0}, {0, -1}}});

  BinaryCostPair lower({{{0, 0}, {-1, 0}}}, {{{0, 0}, {0, 0}}});
  CHECK(apply_action(lower, GroupAction::kTranspose).m() == CostMatrix{{{0, -1}, {0, 0}}});
  CHECK(apply_action(lower, GroupAction::kColSwap).m() == CostMatrix{{{0, 0}, {0, -1}}});

  for (const auto& p : enumerate_classes()) {
    for (auto a : kGenerators) CHECK(apply_action(apply_action(p, a), a) == p);
    CHECK(apply_action(p, GroupAction::kIdentity) == p);
  }
}

TEST_CASE("orbit sizes of the named families") {
  CHECK(orbit(BinaryCostPair::from_code(0)).size() == 1);
  CHECK(count_in(orbit(cac_form()), 2, 2) == 2);
  CHECK(count_in(orbit(half_cac_form()), 1, 2) == 4);
  CHECK(count_in(orbit(family_generator(VertexBoundFamily::kC11a)), 1, 1) == 4);
  CHECK(count_in(orbit(family_generator(VertexBoundFamily::kC11c)), 1, 1) == 8);
  CHECK(count_in(orbit(family_generator(VertexBoundFamily::kC12a)), 1, 2) == 8);
  CHECK(count_in(orbit(family_generator(VertexBoundFamily::kC22a)), 2, 2) == 4);
  CHECK(count_in(orbit(c13_achiral_generator()), 1, 3) == 4);
  CHECK(orbit(c13_achiral_generator()).size() == 8);
  CHECK(orbit(half_cac_form()).size() == 8);
  CHECK(orbit(family_generator(VertexBoundFamily::kC12a)).size() == 16);
}

TEST_CASE("orbits partition the classes and preserve the cell") {
  std::map<unsigned, unsigned> rep_of;
  for (const auto& p : enumerate_classes()) {
    auto members = orbit(p);
    CHECK(std::is_sorted(members.begin(), members.end()));
    CHECK(orbit_representative(p) == members.front());
    for (const auto& m : members) {
      CHECK(orbit(m) == members);
      CHECK(is_overlapping(m) == is_overlapping(p));
      CHECK(classify_cell(m) == classify_cell(p));
      auto path = action_path(p, m);
      BinaryCostPair walked = p;
      for (auto a : path) walked = apply_action(walked, a);
      CHECK(walked == m);
    }
  }
  CHECK(action_path(cac_form(), cac_form()).empty());
  CHECK_THROWS_AS(action_path(cac_form(), half_cac_form()), std::invalid_argument);
}

TEST_CASE("theorem predicate and classification") {
  CHECK(theorem_predicate(cac_form()));
  CHECK(theorem_predicate(half_cac_form()));
  BinaryCostPair full({{{-1, -1}, {-1, -1}}}, {{{-1, -1}, {-1, -1}}});
  CHECK_FALSE(theorem_predicate(full));

  auto records = classify_all();
  REQUIRE(records.size() == 256);
  std::map<Verdict, int> counts;
  int predicate_true = 0;
  for (const auto& r : records) {
    ++counts[r.verdict];
    predicate_true += theorem_predicate(r.pair);
    CHECK(is_advantage(r.verdict) == theorem_predicate(r.pair));
    CHECK(r.orbit_rep == orbit_representative(r.pair));
  }
  CHECK(predicate_true == 10);
  CHECK(counts[Verdict::kNull] == 31);
  CHECK(counts[Verdict::kPigeonhole] == 93);
  CHECK(counts[Verdict::kCacOrbit] == 2);
  CHECK(counts[Verdict::kHalfCacOrbit] == 8);
  CHECK(counts[Verdict::kNull] + counts[Verdict::kPigeonhole] == 124);
}

TEST_CASE("instance transport") {
  std::mt19937_64 rng(21);
  SUBCASE("actions are involutions on instances") {
    for (int k = 0; k < 50; ++k) {
      auto d = testing::random_instance(rng);
      for (auto a : kAll) {
        CHECK(transport_instance(transport_instance(d, a), a) == d);
        CHECK(transport_instance(d, a).cost_pair() == apply_action(d.cost_pair(), a));
      }
    }
  }
  SUBCASE("priors, chi and labels move as constructed") {
    auto d = testing::random_instance(rng);
    auto t = transport_instance(d, GroupAction::kTranspose);
    auto e = transport_instance(d, GroupAction::kExchange);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int w = 0; w < 2; ++w) {
          CHECK(t.prior()(a, b, w) == d.prior()(b, a, w));
          CHECK(e.prior()(a, b, w) == d.prior()(a, b, 1 - w));
        }
    CHECK(e.chi() == 1 / d.chi());
    CHECK(t.chi() == d.chi());
    CHECK(t.labels().a == d.labels().b);
    auto r = transport_instance(d, GroupAction::kRowSwap);
    CHECK(r.labels().a[0] == d.labels().a[1]);
    auto c = transport_instance(d, GroupAction::kColSwap);
    CHECK(c.labels().b[0] == d.labels().b[1]);
  }
  SUBCASE("exchange needs chi > 0") {
    ProblemInstance d(cac_form(), JointPrior::uniform(), q(0));
    CHECK_THROWS_AS(transport_instance(d, GroupAction::kExchange), std::invalid_argument);
  }
  SUBCASE("policy costs are preserved, or scaled by 1/chi under E") {
    for (int k = 0; k < 100; ++k) {
      auto d = testing::random_instance(rng);
      auto policy = testing::random_policy(rng);
      for (auto a : kAll) {
        auto moved = transport_instance(d, a);
        Rational before = expected_cost(d, policy);
        Rational after = expected_cost(moved, transport_policy(policy, a));
        if (a == GroupAction::kExchange) {
          CHECK(after == before / d.chi());
        } else {
          CHECK(after == before);
        }
      }
    }
  }
  SUBCASE("optima follow the same rule") {
    for (int k = 0; k < 100; ++k) {
      auto d = testing::random_instance(rng);
      for (auto a : kAll) {
        auto moved = transport_instance(d, a);
        Rational scale = a == GroupAction::kExchange ? Rational(1 / d.chi()) : Rational(1);
        CHECK(local_optimum(moved).value == scale * local_optimum(d).value);
        CHECK(ns_optimum(moved).value == scale * ns_optimum(d).value);
        CHECK(centralized_optimum(moved).value == scale * centralized_optimum(d).value);
      }
    }
  }
}
