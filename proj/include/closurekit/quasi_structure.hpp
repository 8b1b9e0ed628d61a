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

// Quasi-closed, critical and essential sets of a closure system, and the
// saturation operator.
//
// Q is quasi-closed when it is not closed but adding it to the closed
// family F keeps the family intersection-closed. The saturation operator is
// the closure operator of F together with all quasi-closed sets. Critical
// sets are the quasi-closed sets with no quasi-closed proper subset of the
// same closure, and essential sets are the closures of quasi-closed sets.
//
// Everything here enumerates all 2^n subsets and is bounded by the universe
// cap.

#pragma once

#include "closurekit/closure_core.hpp"

namespace closurekit {

struct QuasiReport {
  SetFamily quasi_closed;
  SetFamily critical;
  SetFamily essential;
  /// F together with every quasi-closed set.
  SetFamily saturation_family;

  friend bool operator==(const QuasiReport&, const QuasiReport&) = default;
};

/// q is not closed, and every closed S either contains q or meets it in a
/// closed set.
bool is_quasi_closed(const ClosureSystem& sys, AttrSet q);

SetFamily quasi_closed_sets(const ClosureSystem& sys);

/// Critical sets among a precomputed quasi-closed family.
SetFamily critical_sets(const ClosureSystem& sys, const SetFamily& quasi);
SetFamily critical_sets(const ClosureSystem& sys);

SetFamily essential_sets(const ClosureSystem& sys, const SetFamily& quasi);
SetFamily essential_sets(const ClosureSystem& sys);

QuasiReport analyze(const ClosureSystem& sys);

/// The closure system formed by F and all quasi-closed sets. Construction
/// re-validates that this family is intersection-closed.
ClosureSystem saturation_system(const ClosureSystem& sys);

/// The saturation operator of a fixed system; builds the saturation family
/// once and answers queries against it.
class Saturation {
 public:
  explicit Saturation(const ClosureSystem& sys)
      : saturated_(saturation_system(sys)) {}

  AttrSet operator()(AttrSet a) const {
    return closure_from_family(saturated_, a);
  }

  const ClosureSystem& system() const { return saturated_; }

 private:
  ClosureSystem saturated_;
};

/// One-shot saturation; prefer Saturation for repeated queries.
AttrSet saturation(const ClosureSystem& sys, AttrSet a);

/// Given F1 strictly inside F2 (same universe), returns a member of F2 that
/// is quasi-closed for F1: the first member of F2 \ F1 in canonical order,
/// which is inclusion-minimal in the difference. Throws PreconditionError
/// if F1 is not a proper subfamily of F2.
AttrSet lemma1_witness(const ClosureSystem& f1, const ClosureSystem& f2);

}  // namespace closurekit
