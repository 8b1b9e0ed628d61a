// Copyright 2026 The closurekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "closurekit/closure_core.hpp"

#include <algorithm>

namespace closurekit {

bool canonical_less(const ImplicationSet& a, const ImplicationSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      ImplicationLess{});
}

ClosureSystem::ClosureSystem(Universe universe, SetFamily closed)
    : universe_(std::move(universe)), closed_(std::move(closed)) {
  for (AttrSet s : closed_) {
    if (!universe_.owns(s)) {
      throw PreconditionError("closed set lies outside the universe");
    }
  }
  if (auto defect = find_intersection_defect(closed_, universe_)) {
    throw NotIntersectionClosed(universe_, *defect);
  }
}

bool obeys_all(AttrSet s, const ImplicationSet& sigma) {
  return std::all_of(sigma.begin(), sigma.end(),
                     [s](const Implication& imp) { return obeys(s, imp); });
}

AttrSet close_under_implications(const ImplicationSet& sigma, AttrSet a) {
  AttrSet current = a;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Implication& imp : sigma) {
      if (imp.lhs.is_subset_of(current) && !imp.rhs.is_subset_of(current)) {
        current = current | imp.rhs;
        changed = true;
      }
    }
  }
  return current;
}

SetFamily models_family(const ImplicationSet& sigma, const Universe& universe) {
  require_enumerable(universe);
  const AttrSet::Bits count = AttrSet::Bits{1} << universe.size();
  std::vector<AttrSet> models;
  for (AttrSet::Bits bits = 0; bits < count; ++bits) {
    if (obeys_all(AttrSet(bits), sigma)) models.emplace_back(bits);
  }
  return SetFamily(std::move(models));
}

ClosureSystem system_from_implications(const ImplicationSet& sigma,
                                       const Universe& universe) {
  return ClosureSystem(universe, models_family(sigma, universe));
}

AttrSet closure_from_family(const ClosureSystem& sys, AttrSet a) {
  AttrSet result = sys.universe().full();
  for (AttrSet s : sys.closed()) {
    if (a.is_subset_of(s)) result = result & s;
  }
  return result;
}

}  // namespace closurekit
