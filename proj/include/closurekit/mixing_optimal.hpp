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

// Mixing bases across essential sets, and exhaustive search for optimal
// bases (minimum total |lhs| + |rhs|) on small universes.
//
// Mixing: given one valid basis per essential set E, keep from each basis
// only the implications whose lhs closes to its assigned E; the union is
// again a valid basis.
//
// Optimal search runs in one of two spaces:
//  - restricted: exactly one implication per critical set C, lhs ranging
//    over the minimum-cardinality sets saturating to C, rhs over the
//    nonempty subsets of the closure of C; an optimum whose lhs is empty is
//    then also reported with its rhs split over every partition, since
//    {} -> B and {} -> B1, {} -> B2 cost the same;
//  - unrestricted: arbitrary sets of implications over the universe (the
//    inert, size-zero implication {} -> {} excluded), bounded by the size
//    of the canonical basis.
// Both are branch-and-bound over bitmasks of the 2^n subsets, so the
// optimal-search universe is limited to kMaxOptimalUniverse elements.

#pragma once

#include <cstdint>
#include <map>
#include <stop_token>
#include <vector>

#include "closurekit/basis_ops.hpp"

namespace closurekit {

struct MixSource {
  AttrSet essential;
  ImplicationSet basis;
};

struct MixSpec {
  std::vector<MixSource> sources;
};

/// Pairs bases with the essential sets of sys in canonical order. Throws
/// EssentialSetMismatch when the counts differ.
MixSpec assign_in_essential_order(const ClosureSystem& sys,
                                  std::vector<ImplicationSet> bases);

/// Union over sources of the implications whose lhs closes to the source's
/// essential set. Throws EssentialSetMismatch unless the keys are exactly
/// the essential sets, each once, and InvalidSourceBasis if a source is not
/// a valid basis. The result is re-checked; a failure there raises
/// std::logic_error.
ImplicationSet mix_bases(const MixSpec& spec, const ClosureSystem& sys);

inline constexpr std::size_t kMaxOptimalUniverse = 6;
inline constexpr std::size_t kDefaultOptimalUniverse = 5;
inline constexpr std::uint64_t kDefaultCandidateBudget = 10'000'000;

struct SearchLimits {
  std::size_t max_universe = kDefaultOptimalUniverse;
  /// Search nodes (partial or complete candidate bases) evaluated before
  /// giving up.
  std::uint64_t candidate_budget = kDefaultCandidateBudget;
  /// Checked once per search node.
  std::stop_token stop;
};

enum class SearchSpace { kRestricted, kUnrestricted };

/// Essential set -> sum of |rhs| over implications whose lhs closes to it.
using RightSums = std::map<AttrSet, std::size_t, CanonicalLess>;

/// Essential set -> saturations of the lhs of its implications, sorted.
using LhsSaturations = std::map<AttrSet, std::vector<AttrSet>, CanonicalLess>;

struct OptimalReport {
  SearchSpace space = SearchSpace::kRestricted;
  /// False when the budget ran out or the search was cancelled; the
  /// remaining fields then describe the best bases seen so far.
  bool complete = true;
  std::uint64_t candidates_evaluated = 0;
  std::size_t optimal_size = 0;
  /// Canonical order.
  std::vector<ImplicationSet> optimal_bases;
  /// Aligned with optimal_bases.
  std::vector<RightSums> right_sums;
  std::vector<LhsSaturations> lhs_saturations;
  /// right_sums identical across all optimal bases.
  bool constancy = true;
  /// lhs_saturations identical across all optimal bases.
  bool lhs_saturations_coincide = true;
};

/// Right-side mass of sigma per essential set; essential sets without
/// implications map to 0. Sigma must be a valid basis.
RightSums optimal_right_sums(const ImplicationSet& sigma,
                             const ClosureSystem& sys);

OptimalReport enumerate_optimal_bases(const ClosureSystem& sys,
                                      const SearchLimits& limits = {});

OptimalReport enumerate_optimal_bases_unrestricted(
    const ClosureSystem& sys, const SearchLimits& limits = {});

/// Every lhs of sigma has minimum cardinality among the sets with the same
/// saturation.
bool minimal_generator_check(const ImplicationSet& sigma,
                             const ClosureSystem& sys);

/// Runs the restricted optimal search and returns its constancy flag.
/// Throws BudgetExceeded when the search does not complete.
bool verify_optright(const ClosureSystem& sys, const SearchLimits& limits = {});

}  // namespace closurekit
