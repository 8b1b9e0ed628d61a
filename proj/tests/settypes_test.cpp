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

#include "closurekit/settypes.hpp"
#include "test_support.hpp"

namespace closurekit {
namespace {

using testing::letters;

TEST_CASE("universe rejects empty, duplicate and oversized declarations") {
  CHECK_THROWS_AS(Universe({}), PreconditionError);
  CHECK_THROWS_AS(Universe({"a", "a"}), PreconditionError);
  CHECK_THROWS_AS(Universe({"a", ""}), PreconditionError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(Universe{many}, PreconditionError);

  const Universe u({"p", "q", "r"});
  CHECK(u.size() == 3);
  CHECK(u.index_of("q") == 1);
  CHECK_FALSE(u.index_of("z").has_value());
  CHECK(u.format(u.set_of({"r", "p"})) == "{p r}");
  CHECK(u.format(AttrSet{}) == "{}");
  CHECK_THROWS_AS(u.set_of({"z"}), PreconditionError);
}

TEST_CASE("canonical order: cardinality first, then first element") {
  const Universe u = letters(3);
  std::vector<AttrSet> sets;
  for (AttrSet::Bits b = 0; b < 8; ++b) sets.emplace_back(b);
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  std::vector<std::string> shown;
  for (AttrSet s : sets) shown.push_back(u.format(s));
  CHECK(shown == std::vector<std::string>{"{}", "{a}", "{b}", "{c}", "{a b}",
                                          "{a c}", "{b c}", "{a b c}"});
}

TEST_CASE("canonical order is a strict total order") {
  for (AttrSet::Bits x = 0; x < 32; ++x) {
    CHECK_FALSE(canonical_less(AttrSet(x), AttrSet(x)));
    for (AttrSet::Bits y = 0; y < 32; ++y) {
      if (x != y) {
        CHECK(canonical_less(AttrSet(x), AttrSet(y)) !=
              canonical_less(AttrSet(y), AttrSet(x)));
      }
      for (AttrSet::Bits z = 0; z < 32; z += 3) {
        if (canonical_less(AttrSet(x), AttrSet(y)) &&
            canonical_less(AttrSet(y), AttrSet(z))) {
          CHECK(canonical_less(AttrSet(x), AttrSet(z)));
        }
      }
    }
  }
}

TEST_CASE("set family deduplicates and keeps canonical order") {
  const Universe u = letters(2);
  SetFamily fam({u.full(), u.set_of({"a"}), u.full(), AttrSet{}});
  CHECK(fam.size() == 3);
  CHECK(fam[0] == AttrSet{});
  CHECK(fam[2] == u.full());
  CHECK_FALSE(fam.insert(u.set_of({"a"})));
  CHECK(fam.insert(u.set_of({"b"})));
  CHECK(fam[2] == u.set_of({"b"}));
  CHECK(fam.contains(u.set_of({"b"})));
}

TEST_CASE("intersection_closure examples") {
  {
    const Universe u = letters(2);
    CHECK(intersection_closure(SetFamily{}, u) == SetFamily{u.full()});
    const SetFamily got =
        intersection_closure(SetFamily{u.set_of({"a"}), u.set_of({"b"})}, u);
    CHECK(got == SetFamily{AttrSet{}, u.set_of({"a"}), u.set_of({"b"}),
                           u.full()});
  }
  {
    // Oracle: tests/oracle/derive_examples.py
    const Universe u = letters(3);
    const SetFamily got = intersection_closure(
        SetFamily{u.set_of({"a", "b"}), u.set_of({"b", "c"})}, u);
    CHECK(got == SetFamily{u.set_of({"b"}), u.set_of({"a", "b"}),
                           u.set_of({"b", "c"}), u.full()});
  }
}

TEST_CASE("is_intersection_closed examples") {
  const Universe u2 = letters(2);
  CHECK(is_intersection_closed(
      SetFamily{AttrSet{}, u2.set_of({"a"}), u2.full()}, u2));
  CHECK_FALSE(is_intersection_closed(
      SetFamily{u2.set_of({"a"}), u2.set_of({"b"}), u2.full()}, u2));

  const Universe u3 = letters(3);
  const SetFamily fam{u3.set_of({"a", "b"}), u3.set_of({"b", "c"}), u3.full()};
  CHECK_FALSE(is_intersection_closed(fam, u3));
  auto defect = find_intersection_defect(fam, u3);
  REQUIRE(defect.has_value());
  CHECK_FALSE(defect->missing_universe);
  CHECK((defect->left & defect->right) == u3.set_of({"b"}));

  auto missing = find_intersection_defect(SetFamily{AttrSet{}}, u3);
  REQUIRE(missing.has_value());
  CHECK(missing->missing_universe);
}

TEST_CASE("intersection_closure is idempotent and yields closed families") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Universe u = letters(n);
    const SetFamily fam = testing::random_family(rng, n, 12);
    const SetFamily once = intersection_closure(fam, u);
    CHECK(is_intersection_closed(once, u));
    CHECK(intersection_closure(once, u) == once);
    for (AttrSet s : fam) CHECK(once.contains(s));
  }
}

TEST_CASE("enumeration cap") {
  std::vector<std::string> names;
  for (int i = 0; i < 25; ++i) names.push_back("x" + std::to_string(i));
  const Universe big(names);
  CHECK(default_universe_cap() == kDefaultUniverseCap);
  CHECK_THROWS_AS(require_enumerable(big), UniverseTooLarge);
  CHECK_NOTHROW(require_enumerable(big, 25));
  CHECK_THROWS_AS(require_enumerable(letters(6), 5), UniverseTooLarge);
}

}  // namespace
}  // namespace closurekit
