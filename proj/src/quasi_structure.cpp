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

#include "closurekit/quasi_structure.hpp"

#include <algorithm>

namespace closurekit {

bool is_quasi_closed(const ClosureSystem& sys, AttrSet q) {
  const SetFamily& closed = sys.closed();
  if (closed.contains(q)) return false;
  return std::all_of(closed.begin(), closed.end(), [&](AttrSet s) {
    return q.is_subset_of(s) || closed.contains(s & q);
  });
}

SetFamily quasi_closed_sets(const ClosureSystem& sys) {
  require_enumerable(sys.universe());
  const AttrSet::Bits count = AttrSet::Bits{1} << sys.universe().size();
  std::vector<AttrSet> quasi;
  for (AttrSet::Bits bits = 0; bits < count; ++bits) {
    if (is_quasi_closed(sys, AttrSet(bits))) quasi.emplace_back(bits);
  }
  return SetFamily(std::move(quasi));
}

SetFamily critical_sets(const ClosureSystem& sys, const SetFamily& quasi) {
  std::vector<AttrSet> closures;
  closures.reserve(quasi.size());
  for (AttrSet q : quasi) closures.push_back(closure_from_family(sys, q));

  std::vector<AttrSet> critical;
  for (std::size_t i = 0; i < quasi.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < quasi.size() && minimal; ++j) {
      if (quasi[j].is_proper_subset_of(quasi[i]) &&
          closures[j] == closures[i]) {
        minimal = false;
      }
    }
    if (minimal) critical.push_back(quasi[i]);
  }
  return SetFamily(std::move(critical));
}

SetFamily critical_sets(const ClosureSystem& sys) {
  return critical_sets(sys, quasi_closed_sets(sys));
}

SetFamily essential_sets(const ClosureSystem& sys, const SetFamily& quasi) {
  std::vector<AttrSet> essential;
  essential.reserve(quasi.size());
  for (AttrSet q : quasi) essential.push_back(closure_from_family(sys, q));
  return SetFamily(std::move(essential));
}

SetFamily essential_sets(const ClosureSystem& sys) {
  return essential_sets(sys, quasi_closed_sets(sys));
}

namespace {

SetFamily union_of(const SetFamily& a, const SetFamily& b) {
  std::vector<AttrSet> members(a.begin(), a.end());
  members.insert(members.end(), b.begin(), b.end());
  return SetFamily(std::move(members));
}

}  // namespace

QuasiReport analyze(const ClosureSystem& sys) {
  QuasiReport report;
  report.quasi_closed = quasi_closed_sets(sys);
  report.critical = critical_sets(sys, report.quasi_closed);
  report.essential = essential_sets(sys, report.quasi_closed);
  report.saturation_family = union_of(sys.closed(), report.quasi_closed);
  return report;
}

ClosureSystem saturation_system(const ClosureSystem& sys) {
  return ClosureSystem(sys.universe(),
                       union_of(sys.closed(), quasi_closed_sets(sys)));
}

AttrSet saturation(const ClosureSystem& sys, AttrSet a) {
  return Saturation(sys)(a);
}

AttrSet lemma1_witness(const ClosureSystem& f1, const ClosureSystem& f2) {
  if (!(f1.universe() == f2.universe())) {
    throw PreconditionError("lemma1_witness: systems have different universes");
  }
  const SetFamily& smaller = f1.closed();
  const SetFamily& larger = f2.closed();
  const bool included =
      std::all_of(smaller.begin(), smaller.end(),
                  [&](AttrSet s) { return larger.contains(s); });
  if (!included || smaller.size() == larger.size()) {
    throw PreconditionError(
        "lemma1_witness: first family must be a proper subfamily of the "
        "second");
  }
  // Canonical order is by cardinality first, so the first member outside
  // F1 has no proper subset in F2 \ F1.
  for (AttrSet s : larger) {
    if (!smaller.contains(s)) return s;
  }
  throw PreconditionError("lemma1_witness: families are equal");
}

}  // namespace closurekit
