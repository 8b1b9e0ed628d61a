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

// Implications, the obeys relation, and the two ways of realizing a closure
// operator: forward chaining over an implication set, and intersection over
// an explicit family of closed sets.

#pragma once

#include <cstddef>

#include "closurekit/settypes.hpp"

namespace closurekit {

/// lhs -> rhs. Either side may be empty.
struct Implication {
  AttrSet lhs;
  AttrSet rhs;

  /// |lhs| + |rhs|.
  std::size_t size() const { return lhs.size() + rhs.size(); }

  friend constexpr bool operator==(const Implication&,
                                   const Implication&) = default;
};

struct ImplicationLess {
  constexpr bool operator()(const Implication& a, const Implication& b) const {
    if (a.lhs != b.lhs) return canonical_less(a.lhs, b.lhs);
    return canonical_less(a.rhs, b.rhs);
  }
};

/// Deduplicated implications ordered by lhs, then rhs.
class ImplicationSet
    : public detail::SortedUnique<Implication, ImplicationLess> {
 public:
  using SortedUnique::SortedUnique;

  friend bool operator==(const ImplicationSet&,
                         const ImplicationSet&) = default;
};

/// Lexicographic order on implication sets, used to sort lists of bases.
bool canonical_less(const ImplicationSet& a, const ImplicationSet& b);

/// A universe together with its family of closed sets. The family is
/// validated on construction.
class ClosureSystem {
 public:
  /// Throws NotIntersectionClosed if `closed` lacks X or is not closed under
  /// intersection, and PreconditionError if a member lies outside the
  /// universe.
  ClosureSystem(Universe universe, SetFamily closed);

  const Universe& universe() const { return universe_; }
  const SetFamily& closed() const { return closed_; }

  friend bool operator==(const ClosureSystem&, const ClosureSystem&) = default;

 private:
  Universe universe_;
  SetFamily closed_;
};

/// s obeys lhs -> rhs iff lhs is not inside s or rhs is.
constexpr bool obeys(AttrSet s, const Implication& imp) {
  return !imp.lhs.is_subset_of(s) || imp.rhs.is_subset_of(s);
}

bool obeys_all(AttrSet s, const ImplicationSet& sigma);

/// Least superset of `a` obeying every implication of sigma.
AttrSet close_under_implications(const ImplicationSet& sigma, AttrSet a);

/// All subsets of the universe obeying sigma, by exhaustive enumeration.
/// Throws UniverseTooLarge beyond the enumeration cap.
SetFamily models_family(const ImplicationSet& sigma, const Universe& universe);

/// The closure system whose closed sets are models_family(sigma, universe).
ClosureSystem system_from_implications(const ImplicationSet& sigma,
                                       const Universe& universe);

/// Intersection of all closed sets containing `a`.
AttrSet closure_from_family(const ClosureSystem& sys, AttrSet a);

inline bool is_closed(const ClosureSystem& sys, AttrSet a) {
  return sys.closed().contains(a);
}

}  // namespace closurekit
