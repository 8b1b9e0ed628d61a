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

#include "closurekit/basis_ops.hpp"

#include <algorithm>

namespace closurekit {

ImplicationSet canonical_basis(const ClosureSystem& sys) {
  std::vector<Implication> basis;
  for (AttrSet c : critical_sets(sys)) {
    basis.push_back({c, closure_from_family(sys, c)});
  }
  return ImplicationSet(std::move(basis));
}

BasisVerdict check_basis(const ImplicationSet& sigma, const ClosureSystem& sys,
                         const SetFamily& quasi) {
  for (const Implication& imp : sigma) {
    if (!imp.rhs.is_subset_of(closure_from_family(sys, imp.lhs))) {
      return {RhsExceedsClosure{imp}};
    }
  }
  for (AttrSet q : quasi) {
    const bool refuted =
        std::any_of(sigma.begin(), sigma.end(), [q](const Implication& imp) {
          return imp.lhs.is_subset_of(q) && !imp.rhs.is_subset_of(q);
        });
    if (!refuted) return {UnrefutedQuasiClosed{q}};
  }
  return {};
}

BasisVerdict check_basis(const ImplicationSet& sigma,
                         const ClosureSystem& sys) {
  return check_basis(sigma, sys, quasi_closed_sets(sys));
}

bool check_basis_oracle(const ImplicationSet& sigma, const ClosureSystem& sys) {
  return models_family(sigma, sys.universe()) == sys.closed();
}

bool gd_left_side_property(const ImplicationSet& sigma,
                           const ClosureSystem& sys) {
  const SetFamily quasi = quasi_closed_sets(sys);
  if (!check_basis(sigma, sys, quasi).equivalent()) {
    throw InvalidBasis("gd_left_side_property requires a valid basis");
  }
  const Saturation sigma_of(sys);
  std::vector<AttrSet> saturated_lhs;
  saturated_lhs.reserve(sigma.size());
  for (const Implication& imp : sigma) saturated_lhs.push_back(sigma_of(imp.lhs));

  const SetFamily critical = critical_sets(sys, quasi);
  return std::all_of(critical.begin(), critical.end(), [&](AttrSet c) {
    return std::find(saturated_lhs.begin(), saturated_lhs.end(), c) !=
           saturated_lhs.end();
  });
}

std::size_t basis_size(const ImplicationSet& sigma) {
  std::size_t total = 0;
  for (const Implication& imp : sigma) total += imp.size();
  return total;
}

EssentialGrouping group_by_essential(const ImplicationSet& sigma,
                                     const ClosureSystem& sys,
                                     const SetFamily& essential) {
  std::map<AttrSet, std::vector<Implication>, CanonicalLess> groups;
  std::vector<Implication> rest;
  for (const Implication& imp : sigma) {
    const AttrSet target = closure_from_family(sys, imp.lhs);
    if (essential.contains(target)) {
      groups[target].push_back(imp);
    } else {
      rest.push_back(imp);
    }
  }
  EssentialGrouping out;
  for (auto& [key, members] : groups) {
    out.by_essential.emplace(key, ImplicationSet(std::move(members)));
  }
  out.non_essential = ImplicationSet(std::move(rest));
  return out;
}

EssentialGrouping group_by_essential(const ImplicationSet& sigma,
                                     const ClosureSystem& sys) {
  return group_by_essential(sigma, sys, essential_sets(sys));
}

}  // namespace closurekit
