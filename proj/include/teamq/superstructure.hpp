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

#ifndef TEAMQ_SUPERSTRUCTURE_HPP_
#define TEAMQ_SUPERSTRUCTURE_HPP_

// The 256-class superstructure: m-n signatures, overlapping / achiral /
// chiral cells, the actions {I, T, R, R', E}, orbits, and the maps that carry
// instances and policies between equivalent classes.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "teamq/team_core.hpp"

namespace teamq {

enum class GroupAction { kIdentity, kTranspose, kRowSwap, kColSwap, kExchange };

inline constexpr std::array<GroupAction, 4> kGenerators = {
    GroupAction::kTranspose, GroupAction::kRowSwap, GroupAction::kColSwap,
    GroupAction::kExchange};

std::string_view to_string(GroupAction action);
GroupAction parse_group_action(std::string_view name);

enum class Cell { kOverlapping, kAchiral, kChiral };
std::string_view to_string(Cell cell);

// Why a class is (or is not) able to show a quantum advantage. The null and
// pigeonhole verdicts are the 124 classes removed by counting alone; the
// overlap verdict covers the remaining overlapping classes.
enum class Verdict {
  kNull,
  kPigeonhole,
  kOverlap,
  kVertexBound,
  kDecomposition,
  kCacOrbit,
  kHalfCacOrbit,
};
std::string_view to_string(Verdict verdict);
Verdict parse_verdict(std::string_view name);
bool is_advantage(Verdict verdict);

// The four families whose nonlocal vertices are bounded by a half-sum of two
// constant deterministic policies.
enum class VertexBoundFamily { kC11a, kC11c, kC12a, kC22a };
std::string_view to_string(VertexBoundFamily family);
inline constexpr std::array<VertexBoundFamily, 4> kVertexBoundFamilies = {
    VertexBoundFamily::kC11a, VertexBoundFamily::kC11c,
    VertexBoundFamily::kC12a, VertexBoundFamily::kC22a};

struct MnSignature {
  int m = 0;
  int n = 0;
  friend bool operator==(const MnSignature&, const MnSignature&) = default;
};

BinaryCostPair cac_form();
BinaryCostPair half_cac_form();
// Generator pair of each eliminated family.
BinaryCostPair family_generator(VertexBoundFamily family);
BinaryCostPair c13_achiral_generator();

// All 256 pairs in code order (M mask major, N mask minor).
std::vector<BinaryCostPair> enumerate_classes();

MnSignature mn_signature(const BinaryCostPair& pair);
Cell classify_cell(const BinaryCostPair& pair);
bool is_overlapping(const BinaryCostPair& pair);

BinaryCostPair apply_action(const BinaryCostPair& pair, GroupAction action);

// Closure under the generators, sorted by code.
std::vector<BinaryCostPair> orbit(const BinaryCostPair& pair);

// Action sequence (applied left to right) carrying `from` onto `to`; empty
// when they coincide. Throws std::invalid_argument if `to` is not in the
// orbit of `from`.
std::vector<GroupAction> action_path(const BinaryCostPair& from,
                                     const BinaryCostPair& to);

// Smallest code in the orbit.
BinaryCostPair orbit_representative(const BinaryCostPair& pair);

bool theorem_predicate(const BinaryCostPair& pair);

struct ClassificationRecord {
  BinaryCostPair pair;
  MnSignature mn;
  Cell cell = Cell::kChiral;
  BinaryCostPair orbit_rep;
  Verdict verdict = Verdict::kNull;
};

// Throws std::logic_error if a class falls outside every known family.
ClassificationRecord classify(const BinaryCostPair& pair);
std::vector<ClassificationRecord> classify_all();

// The instance built in the equivalence proofs: T swaps the agents (prior
// observations and labels), R / R' relabel A's / B's actions, and E swaps the
// hidden-state values with chi -> 1 / chi. Throws std::invalid_argument for
// E with chi = 0.
ProblemInstance transport_instance(const ProblemInstance& instance,
                                   GroupAction action);

// Policy on the transported instance with the same cost (T, R, R') or the
// same policy (E, whose cost scales by 1 / chi).
template <class T>
BasicPolicy<T> transport_policy(const BasicPolicy<T>& policy,
                                GroupAction action) {
  BasicPolicy<T> out;
  for (int ua = 0; ua < 2; ++ua) {
    for (int ub = 0; ub < 2; ++ub) {
      for (int xa = 0; xa < 2; ++xa) {
        for (int xb = 0; xb < 2; ++xb) {
          switch (action) {
            case GroupAction::kIdentity:
            case GroupAction::kExchange:
              out(ua, ub, xa, xb) = policy(ua, ub, xa, xb);
              break;
            case GroupAction::kTranspose:
              out(ua, ub, xa, xb) = policy(ub, ua, xb, xa);
              break;
            case GroupAction::kRowSwap:
              out(ua, ub, xa, xb) = policy(1 - ua, ub, xa, xb);
              break;
            case GroupAction::kColSwap:
              out(ua, ub, xa, xb) = policy(ua, 1 - ub, xa, xb);
              break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace teamq

#endif  // TEAMQ_SUPERSTRUCTURE_HPP_
