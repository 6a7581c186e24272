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

#include "teamq/superstructure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace teamq {

std::string_view to_string(GroupAction action) {
  switch (action) {
    case GroupAction::kIdentity: return "I";
    case GroupAction::kTranspose: return "T";
    case GroupAction::kRowSwap: return "R";
    case GroupAction::kColSwap: return "R'";
    case GroupAction::kExchange: return "E";
  }
  return "?";
}

GroupAction parse_group_action(std::string_view name) {
  if (name == "I" || name == "identity") return GroupAction::kIdentity;
  if (name == "T" || name == "transpose") return GroupAction::kTranspose;
  if (name == "R" || name == "row-swap") return GroupAction::kRowSwap;
  if (name == "R'" || name == "col-swap") return GroupAction::kColSwap;
  if (name == "E" || name == "exchange") return GroupAction::kExchange;
  throw std::invalid_argument("unknown group action: " + std::string(name));
}

std::string_view to_string(Cell cell) {
  switch (cell) {
    case Cell::kOverlapping: return "overlapping";
    case Cell::kAchiral: return "achiral";
    case Cell::kChiral: return "chiral";
  }
  return "?";
}

namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 7> kVerdictNames = {{
    {Verdict::kNull, "no-advantage:null"},
    {Verdict::kPigeonhole, "no-advantage:pigeonhole"},
    {Verdict::kOverlap, "no-advantage:overlap"},
    {Verdict::kVertexBound, "no-advantage:vertex-bound"},
    {Verdict::kDecomposition, "no-advantage:decomposition"},
    {Verdict::kCacOrbit, "advantage:CAC-orbit"},
    {Verdict::kHalfCacOrbit, "advantage:halfCAC-orbit"},
}};

CostMatrix transpose(const CostMatrix& a) {
  return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}};
}
CostMatrix swap_rows(const CostMatrix& a) { return {{a[1], a[0]}}; }
CostMatrix swap_cols(const CostMatrix& a) {
  return {{{a[0][1], a[0][0]}, {a[1][1], a[1][0]}}};
}

BinaryCostPair pair_of(const CostMatrix& m, const CostMatrix& n) {
  return BinaryCostPair(m, n);
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  for (const auto& [v, name] : kVerdictNames) {
    if (v == verdict) return name;
  }
  return "?";
}

Verdict parse_verdict(std::string_view name) {
  for (const auto& [v, n] : kVerdictNames) {
    if (n == name) return v;
  }
  throw std::invalid_argument("unknown verdict: " + std::string(name));
}

bool is_advantage(Verdict verdict) {
  return verdict == Verdict::kCacOrbit || verdict == Verdict::kHalfCacOrbit;
}

std::string_view to_string(VertexBoundFamily family) {
  switch (family) {
    case VertexBoundFamily::kC11a: return "C11a";
    case VertexBoundFamily::kC11c: return "C11c";
    case VertexBoundFamily::kC12a: return "C12a";
    case VertexBoundFamily::kC22a: return "C22a";
  }
  return "?";
}

BinaryCostPair cac_form() {
  return pair_of({{{-1, 0}, {0, -1}}}, {{{0, -1}, {-1, 0}}});
}

BinaryCostPair half_cac_form() {
  return pair_of({{{-1, 0}, {0, 0}}}, {{{0, -1}, {-1, 0}}});
}

BinaryCostPair family_generator(VertexBoundFamily family) {
  switch (family) {
    case VertexBoundFamily::kC11a:
      return pair_of({{{-1, 0}, {0, 0}}}, {{{0, 0}, {0, -1}}});
    case VertexBoundFamily::kC11c:
      return pair_of({{{-1, 0}, {0, 0}}}, {{{0, -1}, {0, 0}}});
    case VertexBoundFamily::kC12a:
      return pair_of({{{-1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}}});
    case VertexBoundFamily::kC22a:
      return pair_of({{{-1, 0}, {-1, 0}}}, {{{0, -1}, {0, -1}}});
  }
  throw std::invalid_argument("unknown family");
}

BinaryCostPair c13_achiral_generator() {
  return pair_of({{{-1, 0}, {0, 0}}}, {{{0, -1}, {-1, -1}}});
}

std::vector<BinaryCostPair> enumerate_classes() {
  std::vector<BinaryCostPair> classes;
  classes.reserve(256);
  for (unsigned code = 0; code < 256; ++code) {
    classes.push_back(BinaryCostPair::from_code(code));
  }
  return classes;
}

MnSignature mn_signature(const BinaryCostPair& pair) {
  return {std::popcount(matrix_mask(pair.m())),
          std::popcount(matrix_mask(pair.n()))};
}

bool is_overlapping(const BinaryCostPair& pair) {
  return (matrix_mask(pair.m()) & matrix_mask(pair.n())) != 0;
}

Cell classify_cell(const BinaryCostPair& pair) {
  if (is_overlapping(pair)) return Cell::kOverlapping;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (pair.m()[i][j] == -1 && pair.n()[1 - i][1 - j] == -1) {
        return Cell::kAchiral;
      }
    }
  }
  return Cell::kChiral;
}

BinaryCostPair apply_action(const BinaryCostPair& pair, GroupAction action) {
  switch (action) {
    case GroupAction::kIdentity:
      return pair;
    case GroupAction::kTranspose:
      return pair_of(transpose(pair.m()), transpose(pair.n()));
    case GroupAction::kRowSwap:
      return pair_of(swap_rows(pair.m()), swap_rows(pair.n()));
    case GroupAction::kColSwap:
      return pair_of(swap_cols(pair.m()), swap_cols(pair.n()));
    case GroupAction::kExchange:
      return pair_of(pair.n(), pair.m());
  }
  throw std::invalid_argument("unknown group action");
}

namespace {

// Breadth-first closure; each reached pair maps to the action that first
// reached it and its predecessor.
std::map<unsigned, std::pair<unsigned, GroupAction>> explore(
    const BinaryCostPair& start) {
  std::map<unsigned, std::pair<unsigned, GroupAction>> parent;
  parent.emplace(start.code(),
                 std::pair{start.code(), GroupAction::kIdentity});
  std::deque<BinaryCostPair> frontier{start};
  while (!frontier.empty()) {
    BinaryCostPair current = frontier.front();
    frontier.pop_front();
    for (GroupAction action : kGenerators) {
      BinaryCostPair next = apply_action(current, action);
      if (parent.emplace(next.code(), std::pair{current.code(), action}).second) {
        frontier.push_back(next);
      }
    }
  }
  return parent;
}

}  // namespace

std::vector<BinaryCostPair> orbit(const BinaryCostPair& pair) {
  std::vector<BinaryCostPair> members;
  for (const auto& [code, unused] : explore(pair)) {
    members.push_back(BinaryCostPair::from_code(code));
  }
  return members;
}

std::vector<GroupAction> action_path(const BinaryCostPair& from,
                                     const BinaryCostPair& to) {
  auto parent = explore(from);
  auto it = parent.find(to.code());
  if (it == parent.end()) {
    throw std::invalid_argument("target pair is not in the orbit");
  }
  std::vector<GroupAction> path;
  unsigned code = to.code();
  while (code != from.code()) {
    const auto& [prev, action] = parent.at(code);
    path.push_back(action);
    code = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

BinaryCostPair orbit_representative(const BinaryCostPair& pair) {
  return orbit(pair).front();
}

namespace {

bool orbit_contains(const std::vector<BinaryCostPair>& members,
                    const BinaryCostPair& pair) {
  return std::binary_search(members.begin(), members.end(), pair);
}

}  // namespace

bool theorem_predicate(const BinaryCostPair& pair) {
  auto members = orbit(pair);
  return orbit_contains(members, cac_form()) ||
         orbit_contains(members, half_cac_form());
}

ClassificationRecord classify(const BinaryCostPair& pair) {
  ClassificationRecord record;
  record.pair = pair;
  record.mn = mn_signature(pair);
  record.cell = classify_cell(pair);
  auto members = orbit(pair);
  record.orbit_rep = members.front();

  if (std::min(record.mn.m, record.mn.n) == 0) {
    record.verdict = Verdict::kNull;
  } else if (record.mn.m + record.mn.n >= 5) {
    record.verdict = Verdict::kPigeonhole;
  } else if (record.cell == Cell::kOverlapping) {
    record.verdict = Verdict::kOverlap;
  } else if (orbit_contains(members, cac_form())) {
    record.verdict = Verdict::kCacOrbit;
  } else if (orbit_contains(members, half_cac_form())) {
    record.verdict = Verdict::kHalfCacOrbit;
  } else if (orbit_contains(members, c13_achiral_generator())) {
    record.verdict = Verdict::kDecomposition;
  } else {
    bool bounded = std::any_of(
        kVertexBoundFamilies.begin(), kVertexBoundFamilies.end(),
        [&](VertexBoundFamily f) {
          return orbit_contains(members, family_generator(f));
        });
    if (!bounded) {
      throw std::logic_error("class " + std::to_string(pair.code()) +
                             " is outside every known family");
    }
    record.verdict = Verdict::kVertexBound;
  }
  return record;
}

std::vector<ClassificationRecord> classify_all() {
  std::vector<ClassificationRecord> records;
  records.reserve(256);
  for (const auto& pair : enumerate_classes()) records.push_back(classify(pair));
  return records;
}

ProblemInstance transport_instance(const ProblemInstance& instance,
                                   GroupAction action) {
  const auto& prior = instance.prior();
  const auto& labels = instance.labels();
  BinaryCostPair pair = apply_action(instance.cost_pair(), action);
  switch (action) {
    case GroupAction::kIdentity:
      return instance;
    case GroupAction::kTranspose: {
      std::array<Rational, 8> masses;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          for (int w = 0; w < 2; ++w) {
            masses[JointPrior::index(a, b, w)] = prior(b, a, w);
          }
        }
      }
      return ProblemInstance(
          pair, JointPrior::from_rationals(masses, prior.is_exact()),
          instance.chi(), ActionLabels{labels.b, labels.a});
    }
    case GroupAction::kRowSwap:
      return ProblemInstance(pair, prior, instance.chi(),
                             ActionLabels{{labels.a[1], labels.a[0]}, labels.b});
    case GroupAction::kColSwap:
      return ProblemInstance(pair, prior, instance.chi(),
                             ActionLabels{labels.a, {labels.b[1], labels.b[0]}});
    case GroupAction::kExchange: {
      if (instance.chi() == 0) {
        throw std::invalid_argument("exchange needs chi > 0");
      }
      std::array<Rational, 8> masses;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          for (int w = 0; w < 2; ++w) {
            masses[JointPrior::index(a, b, w)] = prior(a, b, 1 - w);
          }
        }
      }
      Rational inverse = 1 / instance.chi();
      return ProblemInstance(
          pair, JointPrior::from_rationals(masses, prior.is_exact()), inverse,
          labels);
    }
  }
  throw std::invalid_argument("unknown group action");
}

}  // namespace teamq
