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

// Element universes, attribute sets and deduplicated set families.
//
// An AttrSet is a bit vector over a Universe: bit i is set iff the i-th
// declared element is a member. AttrSets do not carry their universe; every
// API that mixes sets assumes they were built over the same one.
//
// All families are kept in canonical order: ascending cardinality, then
// lexicographic by bit vector read from element 0 upwards, where a set bit
// sorts before a clear one. For sets of equal size this is the familiar
// order on sorted element lists ({a b} < {a c} < {b c}).

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "closurekit/errors.hpp"

namespace closurekit {

/// Hard limit imposed by the 64-bit set representation.
inline constexpr std::size_t kMaxUniverseSize = 64;

/// Ceiling for the configurable enumeration cap; 2^30 subsets is already
/// far beyond desk scale.
inline constexpr std::size_t kMaxEnumerationCap = 30;

inline constexpr std::size_t kDefaultUniverseCap = 24;

/// Environment variable overriding kDefaultUniverseCap.
inline constexpr const char* kUniverseCapEnv = "CLOSUREKIT_UNIVERSE_CAP";

class AttrSet {
 public:
  using Bits = std::uint64_t;

  constexpr AttrSet() = default;
  constexpr explicit AttrSet(Bits bits) : bits_(bits) {}

  static constexpr AttrSet singleton(std::size_t index) {
    return AttrSet(Bits{1} << index);
  }

  /// The set {0, ..., n-1}.
  static constexpr AttrSet prefix(std::size_t n) {
    return AttrSet(n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t index) const {
    return (bits_ >> index) & 1U;
  }
  constexpr bool is_subset_of(AttrSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(AttrSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  constexpr AttrSet with(std::size_t index) const {
    return AttrSet(bits_ | (Bits{1} << index));
  }

  friend constexpr AttrSet operator&(AttrSet a, AttrSet b) {
    return AttrSet(a.bits_ & b.bits_);
  }
  friend constexpr AttrSet operator|(AttrSet a, AttrSet b) {
    return AttrSet(a.bits_ | b.bits_);
  }
  /// Set difference.
  friend constexpr AttrSet operator-(AttrSet a, AttrSet b) {
    return AttrSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(AttrSet, AttrSet) = default;

  /// Element indices in ascending order.
  std::vector<std::size_t> indices() const;

 private:
  Bits bits_ = 0;
};

/// Strict weak (in fact total) canonical order on AttrSets.
constexpr bool canonical_less(AttrSet a, AttrSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const AttrSet::Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Lowest differing element decides; the set holding it comes first.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(AttrSet a, AttrSet b) const {
    return canonical_less(a, b);
  }
};

/// The ground set X: an ordered list of distinct, nonempty element names.
/// Declaration order fixes bit positions.
class Universe {
 public:
  /// Throws PreconditionError on empty universes, empty or duplicate names,
  /// or more than kMaxUniverseSize elements.
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_[index]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// X itself.
  AttrSet full() const { return AttrSet::prefix(size()); }
  bool owns(AttrSet s) const { return s.is_subset_of(full()); }

  /// Builds a set from element names; throws PreconditionError on unknown
  /// names.
  AttrSet set_of(std::span<const std::string_view> names) const;
  AttrSet set_of(std::initializer_list<std::string_view> names) const {
    return set_of(std::span<const std::string_view>(names.begin(),
                                                    names.size()));
  }

  /// Renders `{a b}` in universe order.
  std::string format(AttrSet s) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Default cap on universe size for operations enumerating 2^n subsets.
/// Reads kUniverseCapEnv once; falls back to kDefaultUniverseCap and clamps
/// to [1, kMaxEnumerationCap].
std::size_t default_universe_cap();

/// Throws UniverseTooLarge when 2^|universe| enumeration exceeds the cap.
void require_enumerable(const Universe& universe,
                        std::size_t cap = default_universe_cap());

namespace detail {

/// Sorted, deduplicated vector under a strict total order.
template <typename T, typename Less>
class SortedUnique {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  SortedUnique() = default;
  explicit SortedUnique(std::vector<T> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(), Less{});
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  SortedUnique(std::initializer_list<T> items)
      : SortedUnique(std::vector<T>(items)) {}

  /// Returns false if the item was already present.
  bool insert(const T& item) {
    auto it = std::lower_bound(items_.begin(), items_.end(), item, Less{});
    if (it != items_.end() && *it == item) return false;
    items_.insert(it, item);
    return true;
  }

  bool contains(const T& item) const {
    return std::binary_search(items_.begin(), items_.end(), item, Less{});
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  std::span<const T> items() const { return items_; }

  friend bool operator==(const SortedUnique&, const SortedUnique&) = default;

 private:
  std::vector<T> items_;
};

}  // namespace detail

/// A deduplicated family of sets in canonical order.
class SetFamily : public detail::SortedUnique<AttrSet, CanonicalLess> {
 public:
  using SortedUnique::SortedUnique;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

/// Smallest family containing fam and X that is closed under pairwise
/// intersection.
SetFamily intersection_closure(const SetFamily& fam, const Universe& universe);

/// Why a family fails to be intersection-closed: either X is missing, or
/// `left & right` is missing.
struct IntersectionDefect {
  bool missing_universe = false;
  AttrSet left;
  AttrSet right;
};

/// First defect found in canonical pair order, if any.
std::optional<IntersectionDefect> find_intersection_defect(
    const SetFamily& fam, const Universe& universe);

inline bool is_intersection_closed(const SetFamily& fam,
                                   const Universe& universe) {
  return !find_intersection_defect(fam, universe).has_value();
}

/// Thrown when a family that must be a closure system is not
/// intersection-closed.
class NotIntersectionClosed : public Error {
 public:
  NotIntersectionClosed(const Universe& universe, IntersectionDefect defect);

  const IntersectionDefect& defect() const { return defect_; }

 private:
  IntersectionDefect defect_;
};

}  // namespace closurekit
