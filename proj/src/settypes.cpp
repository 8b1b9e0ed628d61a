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

#include "closurekit/settypes.hpp"

#include <charconv>
#include <cstdlib>
#include <unordered_set>

namespace closurekit {

std::vector<std::size_t> AttrSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("universe must be nonempty");
  if (names_.size() > kMaxUniverseSize) {
    throw PreconditionError("universe has " + std::to_string(names_.size()) +
                            " elements, at most " +
                            std::to_string(kMaxUniverseSize) +
                            " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw PreconditionError("universe element names must be nonempty");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw PreconditionError("duplicate universe element '" + names_[i] +
                              "'");
    }
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AttrSet Universe::set_of(std::span<const std::string_view> names) const {
  AttrSet out;
  for (std::string_view n : names) {
    auto idx = index_of(n);
    if (!idx) {
      throw PreconditionError("unknown element '" + std::string(n) + "'");
    }
    out = out.with(*idx);
  }
  return out;
}

std::string Universe::format(AttrSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.indices()) {
    if (!first) out += ' ';
    out += names_.at(i);
    first = false;
  }
  out += '}';
  return out;
}

std::size_t default_universe_cap() {
  static const std::size_t cap = [] {
    std::size_t value = kDefaultUniverseCap;
    if (const char* env = std::getenv(kUniverseCapEnv)) {
      std::string_view text(env);
      std::size_t parsed = 0;
      auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), parsed);
      if (ec == std::errc() && ptr == text.data() + text.size()) {
        value = parsed;
      }
    }
    return std::clamp<std::size_t>(value, 1, kMaxEnumerationCap);
  }();
  return cap;
}

void require_enumerable(const Universe& universe, std::size_t cap) {
  if (universe.size() > std::min(cap, kMaxEnumerationCap)) {
    throw UniverseTooLarge(universe.size(), std::min(cap, kMaxEnumerationCap));
  }
}

SetFamily intersection_closure(const SetFamily& fam, const Universe& universe) {
  std::vector<AttrSet> members(fam.begin(), fam.end());
  std::unordered_set<AttrSet::Bits> seen;
  for (AttrSet s : members) seen.insert(s.bits());
  if (seen.insert(universe.full().bits()).second) {
    members.push_back(universe.full());
  }
  // Every new member is intersected with everything present before it; the
  // pairs among the original members are covered by the same sweep.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const AttrSet meet = members[i] & members[j];
      if (seen.insert(meet.bits()).second) members.push_back(meet);
    }
  }
  return SetFamily(std::move(members));
}

std::optional<IntersectionDefect> find_intersection_defect(
    const SetFamily& fam, const Universe& universe) {
  if (!fam.contains(universe.full())) {
    return IntersectionDefect{.missing_universe = true, .left = {}, .right = {}};
  }
  std::unordered_set<AttrSet::Bits> members;
  for (AttrSet s : fam) members.insert(s.bits());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (!members.contains((fam[i] & fam[j]).bits())) {
        return IntersectionDefect{
            .missing_universe = false, .left = fam[i], .right = fam[j]};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string describe(const Universe& universe,
                     const IntersectionDefect& defect) {
  if (defect.missing_universe) {
    return "family does not contain the universe " +
           universe.format(universe.full());
  }
  return "family is not closed under intersection: " +
         universe.format(defect.left) + " & " + universe.format(defect.right) +
         " = " + universe.format(defect.left & defect.right) +
         " is missing";
}

}  // namespace

NotIntersectionClosed::NotIntersectionClosed(const Universe& universe,
                                             IntersectionDefect defect)
    : Error(describe(universe, defect)), defect_(defect) {}

}  // namespace closurekit
