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

// Implication bases of a closure system: the canonical basis, the two
// validity checks, and size accounting.
//
// check_basis decides validity through quasi-closed sets: sigma is a basis
// of the system iff
//   (1) every A -> B in sigma has B inside the closure of A, and
//   (2) every quasi-closed Q contains the lhs of some implication whose rhs
//       escapes Q.
// check_basis_oracle decides the same question by enumerating every model
// of sigma and comparing against the closed family. The two are kept
// independent so each can check the other.

#pragma once

#include <map>
#include <optional>
#include <variant>

#include "closurekit/quasi_structure.hpp"

namespace closurekit {

/// Condition (1) fails: rhs is not inside the closure of lhs.
struct RhsExceedsClosure {
  Implication implication;

  friend bool operator==(const RhsExceedsClosure&,
                         const RhsExceedsClosure&) = default;
};

/// Condition (2) fails: no implication refutes this quasi-closed set.
struct UnrefutedQuasiClosed {
  AttrSet quasi_closed;

  friend bool operator==(const UnrefutedQuasiClosed&,
                         const UnrefutedQuasiClosed&) = default;
};

using BasisViolation = std::variant<RhsExceedsClosure, UnrefutedQuasiClosed>;

struct BasisVerdict {
  std::optional<BasisViolation> violation;

  bool equivalent() const { return !violation.has_value(); }

  friend bool operator==(const BasisVerdict&, const BasisVerdict&) = default;
};

/// { C -> closure(C) : C critical }, full closure on the right.
ImplicationSet canonical_basis(const ClosureSystem& sys);

/// Reports the first violation, condition (1) before (2), canonical order
/// within each.
BasisVerdict check_basis(const ImplicationSet& sigma, const ClosureSystem& sys);

/// Same, reusing a precomputed quasi-closed family.
BasisVerdict check_basis(const ImplicationSet& sigma, const ClosureSystem& sys,
                         const SetFamily& quasi);

/// True iff the models of sigma are exactly the closed sets.
bool check_basis_oracle(const ImplicationSet& sigma, const ClosureSystem& sys);

/// For every critical set C, some implication of sigma has a lhs saturating
/// to C. Throws InvalidBasis when sigma is not a basis of sys.
bool gd_left_side_property(const ImplicationSet& sigma,
                           const ClosureSystem& sys);

/// Sum of |lhs| + |rhs| over all implications.
std::size_t basis_size(const ImplicationSet& sigma);

/// Implications of sigma keyed by the closure of their lhs. Implications
/// whose lhs does not close to an essential set land in `non_essential`.
struct EssentialGrouping {
  std::map<AttrSet, ImplicationSet, CanonicalLess> by_essential;
  ImplicationSet non_essential;

  friend bool operator==(const EssentialGrouping&,
                         const EssentialGrouping&) = default;
};

EssentialGrouping group_by_essential(const ImplicationSet& sigma,
                                     const ClosureSystem& sys);

EssentialGrouping group_by_essential(const ImplicationSet& sigma,
                                     const ClosureSystem& sys,
                                     const SetFamily& essential);

}  // namespace closurekit
