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

#include <doctest.h>

#include <algorithm>

#include "closurekit/mixing_optimal.hpp"
#include "test_support.hpp"

namespace closurekit {
namespace {

using testing::letters;

const Universe kAbc = letters(3);

AttrSet set(std::initializer_list<std::string_view> names) {
  return kAbc.set_of(names);
}

Implication imp(std::initializer_list<std::string_view> lhs,
                std::initializer_list<std::string_view> rhs) {
  return {set(lhs), set(rhs)};
}

ClosureSystem ac_bc() {
  return system_from_implications(
      ImplicationSet{imp({"a"}, {"c"}), imp({"b"}, {"c"})}, kAbc);
}

ClosureSystem a_to_b() {
  return system_from_implications(ImplicationSet{imp({"a"}, {"b"})}, kAbc);
}

// Expected values below were derived by tests/oracle/derive_examples.py.

TEST_CASE("mixing a basis with itself") {
  const ClosureSystem sys = ac_bc();
  const ImplicationSet canonical = canonical_basis(sys);
  const MixSpec spec{{{set({"a", "c"}), canonical},
                      {set({"b", "c"}), canonical}}};
  const ImplicationSet mixed = mix_bases(spec, sys);
  CHECK(mixed == ImplicationSet{imp({"a"}, {"a", "c"}),
                                imp({"b"}, {"b", "c"})});
}

TEST_CASE("mixing two different bases") {
  const ClosureSystem sys = ac_bc();
  const ImplicationSet first{imp({"a"}, {"a", "c"}), imp({"b"}, {"b", "c"})};
  const ImplicationSet second{imp({"a"}, {"c"}), imp({"b"}, {"c"})};
  const ImplicationSet mixed = mix_bases(
      MixSpec{{{set({"a", "c"}), first}, {set({"b", "c"}), second}}}, sys);
  CHECK(mixed == ImplicationSet{imp({"a"}, {"a", "c"}), imp({"b"}, {"c"})});
  CHECK(check_basis_oracle(mixed, sys));
}

TEST_CASE("mixing with a single essential set selects the targeted part") {
  const ClosureSystem sys = a_to_b();
  const ImplicationSet padded{imp({"a"}, {"b"}), imp({"a", "b", "c"}, {"c"})};
  REQUIRE(check_basis_oracle(padded, sys));
  const ImplicationSet mixed =
      mix_bases(MixSpec{{{set({"a", "b"}), padded}}}, sys);
  CHECK(mixed == ImplicationSet{imp({"a"}, {"b"})});
  CHECK(check_basis_oracle(mixed, sys));
}

TEST_CASE("mix_bases rejects bad specs") {
  const ClosureSystem sys = ac_bc();
  const ImplicationSet canonical = canonical_basis(sys);
  CHECK_THROWS_AS(mix_bases(MixSpec{{{set({"a", "c"}), canonical}}}, sys),
                  EssentialSetMismatch);
  CHECK_THROWS_AS(mix_bases(MixSpec{{{set({"a", "c"}), canonical},
                                     {set({"a", "c"}), canonical}}},
                            sys),
                  EssentialSetMismatch);
  CHECK_THROWS_AS(mix_bases(MixSpec{{{set({"a", "c"}), canonical},
                                     {kAbc.full(), canonical}}},
                            sys),
                  EssentialSetMismatch);
  try {
    mix_bases(MixSpec{{{set({"a", "c"}), canonical},
                       {set({"b", "c"}), ImplicationSet{imp({"a"}, {"c"})}}}},
              sys);
    FAIL("expected InvalidSourceBasis");
  } catch (const InvalidSourceBasis& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(assign_in_essential_order(sys, {canonical}),
                  EssentialSetMismatch);
  const MixSpec ordered = assign_in_essential_order(sys, {canonical, canonical});
  CHECK(ordered.sources[0].essential == set({"a", "c"}));
  CHECK(ordered.sources[1].essential == set({"b", "c"}));
}

TEST_CASE("mixing identical sources keeps the essential-targeted part") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const ClosureSystem sys = testing::random_system(rng, n);
    const auto bases = testing::random_valid_bases(rng, sys, 3);
    const SetFamily essential = essential_sets(sys);
    for (const ImplicationSet& basis : bases) {
      std::vector<ImplicationSet> copies(essential.size(), basis);
      const ImplicationSet mixed =
          mix_bases(assign_in_essential_order(sys, copies), sys);
      std::vector<Implication> targeted;
      for (const Implication& i : basis) {
        if (essential.contains(closure_from_family(sys, i.lhs))) {
          targeted.push_back(i);
        }
      }
      CHECK(mixed == ImplicationSet(targeted));
    }
  }
}

TEST_CASE("optimal bases of small examples") {
  const Universe ab = letters(2);
  const ClosureSystem sys = system_from_implications(
      ImplicationSet{{ab.set_of({"a"}), ab.set_of({"b"})}}, ab);
  const OptimalReport report = enumerate_optimal_bases(sys);
  CHECK(report.complete);
  CHECK(report.optimal_size == 2);
  REQUIRE(report.optimal_bases.size() == 1);
  CHECK(report.optimal_bases[0] ==
        ImplicationSet{{ab.set_of({"a"}), ab.set_of({"b"})}});
  CHECK(report.right_sums[0] == RightSums{{ab.full(), 1}});
  CHECK(report.constancy);
  CHECK(verify_optright(sys));

  const OptimalReport two = enumerate_optimal_bases(ac_bc());
  CHECK(two.optimal_size == 4);
  REQUIRE(two.optimal_bases.size() == 1);
  CHECK(two.optimal_bases[0] ==
        ImplicationSet{imp({"a"}, {"c"}), imp({"b"}, {"c"})});
  CHECK(two.right_sums[0] ==
        RightSums{{set({"a", "c"}), 1}, {set({"b", "c"}), 1}});
  CHECK(two.constancy);
  CHECK(verify_optright(ac_bc()));
}

TEST_CASE("optimal basis of a powerset is empty") {
  const ClosureSystem sys = system_from_implications(ImplicationSet{}, kAbc);
  for (const OptimalReport& report :
       {enumerate_optimal_bases(sys),
        enumerate_optimal_bases_unrestricted(sys)}) {
    CHECK(report.complete);
    CHECK(report.optimal_size == 0);
    REQUIRE(report.optimal_bases.size() == 1);
    CHECK(report.optimal_bases[0].empty());
    CHECK(report.constancy);
  }
  CHECK(verify_optright(sys));
}

TEST_CASE("essential sets with several critical sets") {
  // a <-> b: {a b} is the only essential set, with two critical sets.
  const Universe ab = letters(2);
  const ClosureSystem sys = system_from_implications(
      ImplicationSet{{ab.set_of({"a"}), ab.set_of({"b"})},
                     {ab.set_of({"b"}), ab.set_of({"a"})}},
      ab);
  const OptimalReport report = enumerate_optimal_bases(sys);
  CHECK(report.optimal_size == 4);
  CHECK(report.optimal_bases.size() == 1);
  CHECK(report.right_sums[0] == RightSums{{ab.full(), 2}});

  // Any two elements imply the third.
  const ClosureSystem tie = system_from_implications(
      ImplicationSet{imp({"a", "c"}, {"b"}), imp({"b", "c"}, {"a"}),
                     imp({"a", "b"}, {"c"})},
      kAbc);
  const OptimalReport restricted = enumerate_optimal_bases(tie);
  const OptimalReport unrestricted = enumerate_optimal_bases_unrestricted(tie);
  CHECK(restricted.optimal_size == unrestricted.optimal_size);
  CHECK(restricted.optimal_bases == unrestricted.optimal_bases);
  CHECK(restricted.constancy);
}

TEST_CASE("minimal_generator_check examples") {
  CHECK(minimal_generator_check(ImplicationSet{imp({"a"}, {"b"})}, a_to_b()));
  CHECK(minimal_generator_check(canonical_basis(ac_bc()), ac_bc()));
  // {} -> c, a -> b: {a} and {a c} saturate alike, so {a c} is padded.
  const ClosureSystem sys = system_from_implications(
      ImplicationSet{imp({}, {"c"}), imp({"a"}, {"b"})}, kAbc);
  CHECK_FALSE(
      minimal_generator_check(ImplicationSet{imp({"a", "c"}, {"b"})}, sys));
}

TEST_CASE("search limits") {
  const ClosureSystem big =
      system_from_implications(ImplicationSet{}, letters(6));
  CHECK_THROWS_AS(enumerate_optimal_bases(big), UniverseTooLarge);
  SearchLimits wide;
  wide.max_universe = 6;
  CHECK(enumerate_optimal_bases(big, wide).complete);
  wide.max_universe = 7;
  CHECK_THROWS_AS(
      enumerate_optimal_bases(
          system_from_implications(ImplicationSet{}, letters(7)), wide),
      UniverseTooLarge);

  SearchLimits tiny;
  tiny.candidate_budget = 1;
  const OptimalReport partial = enumerate_optimal_bases(ac_bc(), tiny);
  CHECK_FALSE(partial.complete);
  CHECK(partial.candidates_evaluated == 1);
  CHECK_THROWS_AS(verify_optright(ac_bc(), tiny), BudgetExceeded);

  std::stop_source stop;
  stop.request_stop();
  SearchLimits cancelled;
  cancelled.stop = stop.get_token();
  CHECK_FALSE(enumerate_optimal_bases(ac_bc(), cancelled).complete);
}

TEST_CASE("optimal_right_sums matches the report") {
  const ClosureSystem sys = ac_bc();
  const OptimalReport report = enumerate_optimal_bases(sys);
  REQUIRE(report.optimal_bases.size() == 1);
  const RightSums sums = optimal_right_sums(report.optimal_bases[0], sys);
  CHECK(sums == report.right_sums[0]);
  CHECK(sums.at(set({"a", "c"})) == 1);
  CHECK(sums.at(set({"b", "c"})) == 1);
  CHECK(optimal_right_sums(canonical_basis(sys), sys).at(set({"a", "c"})) ==
        2);
}

TEST_CASE("an empty left side may be split at no cost") {
  const ClosureSystem sys = system_from_implications(
      ImplicationSet{imp({}, {"a", "b"})}, kAbc);
  const OptimalReport report = enumerate_optimal_bases(sys);
  CHECK(report.optimal_size == 2);
  REQUIRE(report.optimal_bases.size() == 2);
  CHECK(report.optimal_bases[0] ==
        ImplicationSet{imp({}, {"a"}), imp({}, {"b"})});
  CHECK(report.optimal_bases[1] == ImplicationSet{imp({}, {"a", "b"})});
  CHECK(report.constancy);
  CHECK_FALSE(report.lhs_saturations_coincide);
  CHECK(enumerate_optimal_bases_unrestricted(sys).optimal_bases ==
        report.optimal_bases);
}

TEST_CASE("restricted and unrestricted searches agree on every system with "
          "at most three elements") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const ClosureSystem& sys : testing::all_systems(n)) {
      const OptimalReport restricted = enumerate_optimal_bases(sys);
      const OptimalReport unrestricted =
          enumerate_optimal_bases_unrestricted(sys);
      REQUIRE(restricted.complete);
      REQUIRE(unrestricted.complete);
      CHECK(restricted.optimal_size == unrestricted.optimal_size);
      CHECK(restricted.optimal_bases == unrestricted.optimal_bases);
      CHECK(restricted.constancy);
      for (const ImplicationSet& basis : restricted.optimal_bases) {
        CHECK(check_basis_oracle(basis, sys));
        CHECK(minimal_generator_check(basis, sys));
      }
    }
  }
}

}  // namespace
}  // namespace closurekit
