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

#include "closurekit/mixing_optimal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace closurekit {

MixSpec assign_in_essential_order(const ClosureSystem& sys,
                                  std::vector<ImplicationSet> bases) {
  const SetFamily essential = essential_sets(sys);
  if (bases.size() != essential.size()) {
    throw EssentialSetMismatch(
        "system has " + std::to_string(essential.size()) +
        " essential sets but " + std::to_string(bases.size()) +
        " sources were given");
  }
  MixSpec spec;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    spec.sources.push_back({essential[i], std::move(bases[i])});
  }
  return spec;
}

ImplicationSet mix_bases(const MixSpec& spec, const ClosureSystem& sys) {
  const SetFamily quasi = quasi_closed_sets(sys);
  const SetFamily essential = essential_sets(sys, quasi);

  SetFamily keys;
  for (const MixSource& source : spec.sources) {
    if (!keys.insert(source.essential)) {
      throw EssentialSetMismatch("essential set " +
                                 sys.universe().format(source.essential) +
                                 " is assigned more than once");
    }
  }
  if (!(keys == essential)) {
    throw EssentialSetMismatch(
        "mix sources must be keyed by exactly the essential sets");
  }
  for (std::size_t i = 0; i < spec.sources.size(); ++i) {
    if (!check_basis(spec.sources[i].basis, sys, quasi).equivalent()) {
      throw InvalidSourceBasis(i);
    }
  }

  std::vector<Implication> mixed;
  for (const MixSource& source : spec.sources) {
    for (const Implication& imp : source.basis) {
      if (closure_from_family(sys, imp.lhs) == source.essential) {
        mixed.push_back(imp);
      }
    }
  }
  ImplicationSet result(std::move(mixed));
  if (!check_basis(result, sys, quasi).equivalent()) {
    throw std::logic_error("mixing valid bases produced an invalid basis");
  }
  return result;
}

namespace {

// Bit s of a SubsetMask stands for the subset with bit pattern s.
using SubsetMask = std::uint64_t;

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

SubsetMask all_subsets(std::size_t n) {
  return n == 6 ? ~SubsetMask{0} : (SubsetMask{1} << (SubsetMask{1} << n)) - 1;
}

SubsetMask family_mask(const SetFamily& fam) {
  SubsetMask mask = 0;
  for (AttrSet s : fam) mask |= SubsetMask{1} << s.bits();
  return mask;
}

SubsetMask obey_mask(const Implication& imp, std::size_t n) {
  SubsetMask mask = 0;
  const AttrSet::Bits count = AttrSet::Bits{1} << n;
  for (AttrSet::Bits s = 0; s < count; ++s) {
    if (obeys(AttrSet(s), imp)) mask |= SubsetMask{1} << s;
  }
  return mask;
}

struct Candidate {
  Implication implication;
  SubsetMask obeyed;
  std::size_t size;
};

bool by_size(const Candidate& a, const Candidate& b) {
  if (a.size != b.size) return a.size < b.size;
  return ImplicationLess{}(a.implication, b.implication);
}

void check_search_universe(const Universe& universe,
                           const SearchLimits& limits) {
  require_enumerable(universe,
                     std::min(limits.max_universe, kMaxOptimalUniverse));
}

// Shared bookkeeping of both searches: budget, cancellation and the set of
// best solutions seen so far.
class Incumbent {
 public:
  Incumbent(const SearchLimits& limits, std::size_t bound)
      : limits_(limits), best_(bound) {}

  // Counts one search node; false once the search must stop.
  bool tick() {
    if (aborted_) return false;
    if (evaluated_ >= limits_.candidate_budget ||
        limits_.stop.stop_requested()) {
      aborted_ = true;
      return false;
    }
    ++evaluated_;
    return true;
  }

  void record(std::size_t size, const std::vector<Implication>& chosen) {
    if (size > best_) return;
    if (size < best_) {
      best_ = size;
      solutions_.clear();
    }
    solutions_.push_back(ImplicationSet(chosen));
  }

  std::size_t best() const { return best_; }
  bool aborted() const { return aborted_; }
  std::uint64_t evaluated() const { return evaluated_; }
  std::vector<ImplicationSet>& solutions() { return solutions_; }

 private:
  const SearchLimits& limits_;
  std::size_t best_;
  bool aborted_ = false;
  std::uint64_t evaluated_ = 0;
  std::vector<ImplicationSet> solutions_;
};

OptimalReport finish_report(const ClosureSystem& sys, SearchSpace space,
                            Incumbent& incumbent) {
  OptimalReport report;
  report.space = space;
  report.complete = !incumbent.aborted();
  report.candidates_evaluated = incumbent.evaluated();

  std::vector<ImplicationSet>& bases = incumbent.solutions();
  std::sort(bases.begin(), bases.end(),
            [](const ImplicationSet& a, const ImplicationSet& b) {
              return canonical_less(a, b);
            });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  report.optimal_bases = std::move(bases);
  report.optimal_size =
      report.optimal_bases.empty() ? 0 : basis_size(report.optimal_bases[0]);

  const SetFamily quasi = quasi_closed_sets(sys);
  const SetFamily essential = essential_sets(sys, quasi);
  const Saturation sigma_of(sys);
  for (const ImplicationSet& basis : report.optimal_bases) {
    if (!check_basis(basis, sys, quasi).equivalent()) {
      throw std::logic_error("optimal search produced an invalid basis");
    }
    const EssentialGrouping groups = group_by_essential(basis, sys, essential);
    RightSums sums;
    LhsSaturations saturations;
    for (AttrSet e : essential) {
      sums[e] = 0;
      saturations[e] = {};
    }
    for (const auto& [e, members] : groups.by_essential) {
      for (const Implication& imp : members) {
        sums[e] += imp.rhs.size();
        saturations[e].push_back(sigma_of(imp.lhs));
      }
      std::sort(saturations[e].begin(), saturations[e].end(), CanonicalLess{});
    }
    report.right_sums.push_back(std::move(sums));
    report.lhs_saturations.push_back(std::move(saturations));
  }
  for (std::size_t i = 1; i < report.optimal_bases.size(); ++i) {
    if (report.right_sums[i] != report.right_sums[0]) report.constancy = false;
    if (report.lhs_saturations[i] != report.lhs_saturations[0]) {
      report.lhs_saturations_coincide = false;
    }
  }
  return report;
}

class RestrictedSearch {
 public:
  RestrictedSearch(const ClosureSystem& sys, const SearchLimits& limits)
      : n_(sys.universe().size()),
        closed_(family_mask(sys.closed())),
        non_closed_(all_subsets(n_) & ~closed_),
        incumbent_(limits, kUnreachable) {
    build_groups(sys);
  }

  Incumbent& run() {
    chosen_.clear();
    descend(0, all_subsets(n_), 0);
    split_empty_left_sides();
    return incumbent_;
  }

 private:
  // An empty left side costs nothing, so {} -> B may be split into
  // {} -> B1, ..., {} -> Bk over any partition of B at the same size. The
  // one-implication-per-critical-set space misses these; add them back.
  void split_empty_left_sides() {
    std::vector<ImplicationSet> expanded;
    for (const ImplicationSet& basis : incumbent_.solutions()) {
      std::vector<Implication> rest;
      AttrSet free_rhs;
      for (const Implication& imp : basis) {
        if (imp.lhs.empty()) {
          free_rhs = imp.rhs;
        } else {
          rest.push_back(imp);
        }
      }
      const std::vector<std::size_t> elements = free_rhs.indices();
      std::vector<AttrSet> blocks;
      auto place = [&](auto& self, std::size_t i) -> void {
        if (i == elements.size()) {
          std::vector<Implication> imps = rest;
          for (AttrSet b : blocks) imps.push_back({AttrSet(), b});
          expanded.push_back(ImplicationSet(std::move(imps)));
          return;
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
          const AttrSet before = blocks[k];
          blocks[k] = before.with(elements[i]);
          self(self, i + 1);
          blocks[k] = before;
        }
        blocks.push_back(AttrSet::singleton(elements[i]));
        self(self, i + 1);
        blocks.pop_back();
      };
      place(place, 0);
    }
    incumbent_.solutions() = std::move(expanded);
  }

  void build_groups(const ClosureSystem& sys) {
    const Saturation sigma_of(sys);
    const AttrSet::Bits count = AttrSet::Bits{1} << n_;
    std::unordered_map<AttrSet::Bits, std::vector<AttrSet>> generators;
    for (AttrSet::Bits bits = 0; bits < count; ++bits) {
      generators[sigma_of(AttrSet(bits)).bits()].emplace_back(bits);
    }
    for (AttrSet critical : critical_sets(sys)) {
      std::vector<AttrSet>& gens = generators[critical.bits()];
      std::size_t min_size = kUnreachable;
      for (AttrSet g : gens) min_size = std::min(min_size, g.size());
      const AttrSet target = closure_from_family(sys, critical);

      std::vector<Candidate> options;
      for (AttrSet lhs : gens) {
        if (lhs.size() != min_size) continue;
        // Nonempty subsets of the closure of the critical set.
        const AttrSet::Bits full = target.bits();
        for (AttrSet::Bits rhs = full; rhs != 0; rhs = (rhs - 1) & full) {
          const Implication imp{lhs, AttrSet(rhs)};
          options.push_back({imp, obey_mask(imp, n_), imp.size()});
        }
      }
      std::sort(options.begin(), options.end(), by_size);
      groups_.push_back(std::move(options));
    }

    const std::size_t g = groups_.size();
    min_rest_.assign(g + 1, 0);
    reachable_kills_.assign(g + 1, 0);
    for (std::size_t i = g; i-- > 0;) {
      min_rest_[i] = min_rest_[i + 1] +
                     (groups_[i].empty() ? 0 : groups_[i].front().size);
      SubsetMask kills = 0;
      for (const Candidate& c : groups_[i]) kills |= ~c.obeyed;
      reachable_kills_[i] = reachable_kills_[i + 1] | (kills & non_closed_);
    }
  }

  void descend(std::size_t group, SubsetMask alive, std::size_t size) {
    if (!incumbent_.tick()) return;
    if (group == groups_.size()) {
      if (alive == closed_) incumbent_.record(size, chosen_);
      return;
    }
    if ((alive & non_closed_ & ~reachable_kills_[group]) != 0) return;
    if (incumbent_.best() != kUnreachable &&
        size + min_rest_[group] > incumbent_.best()) {
      return;
    }
    for (const Candidate& option : groups_[group]) {
      if (incumbent_.best() != kUnreachable &&
          size + option.size + min_rest_[group + 1] > incumbent_.best()) {
        break;
      }
      // Every basis must keep the closed sets as models.
      if ((option.obeyed & closed_) != closed_) continue;
      chosen_.push_back(option.implication);
      descend(group + 1, alive & option.obeyed, size + option.size);
      chosen_.pop_back();
      if (incumbent_.aborted()) return;
    }
  }

  std::size_t n_;
  SubsetMask closed_;
  SubsetMask non_closed_;
  std::vector<std::vector<Candidate>> groups_;
  std::vector<std::size_t> min_rest_;
  std::vector<SubsetMask> reachable_kills_;
  std::vector<Implication> chosen_;
  Incumbent incumbent_;
};

class UnrestrictedSearch {
 public:
  UnrestrictedSearch(const ClosureSystem& sys, const SearchLimits& limits)
      : n_(sys.universe().size()),
        subsets_(std::size_t{1} << n_),
        closed_(family_mask(sys.closed())),
        non_closed_(all_subsets(n_) & ~closed_),
        incumbent_(limits, basis_size(canonical_basis(sys))) {
    build_candidates();
  }

  Incumbent& run() {
    chosen_.clear();
    descend(0, all_subsets(n_), 0);
    return incumbent_;
  }

 private:
  void build_candidates() {
    const AttrSet::Bits count = AttrSet::Bits{1} << n_;
    for (AttrSet::Bits lhs = 0; lhs < count; ++lhs) {
      for (AttrSet::Bits rhs = 0; rhs < count; ++rhs) {
        if (lhs == 0 && rhs == 0) continue;
        const Implication imp{AttrSet(lhs), AttrSet(rhs)};
        const SubsetMask obeyed = obey_mask(imp, n_);
        // An implication violated by a closed set can never be in a basis.
        if ((obeyed & closed_) != closed_) continue;
        candidates_.push_back({imp, obeyed, imp.size()});
      }
    }
    std::sort(candidates_.begin(), candidates_.end(), by_size);

    // cheapest_kill_[i * subsets_ + s]: smallest candidate at index >= i
    // whose implication is violated by subset s.
    const std::size_t m = candidates_.size();
    cheapest_kill_.assign((m + 1) * subsets_, kUnreachable);
    for (std::size_t i = m; i-- > 0;) {
      for (std::size_t s = 0; s < subsets_; ++s) {
        std::size_t best = cheapest_kill_[(i + 1) * subsets_ + s];
        if (!((candidates_[i].obeyed >> s) & 1U)) {
          best = std::min(best, candidates_[i].size);
        }
        cheapest_kill_[i * subsets_ + s] = best;
      }
    }
  }

  // Size still needed to kill every surviving non-closed subset using
  // candidates from index `from` on.
  std::size_t lower_bound(std::size_t from, SubsetMask alive) const {
    std::size_t bound = 0;
    for (SubsetMask rest = alive & non_closed_; rest != 0; rest &= rest - 1) {
      const auto s = static_cast<std::size_t>(std::countr_zero(rest));
      bound = std::max(bound, cheapest_kill_[from * subsets_ + s]);
    }
    return bound;
  }

  void descend(std::size_t from, SubsetMask alive, std::size_t size) {
    if (!incumbent_.tick()) return;
    if (alive == closed_) {
      // Any extension is strictly larger.
      incumbent_.record(size, chosen_);
      return;
    }
    const std::size_t bound = lower_bound(from, alive);
    if (bound == kUnreachable || size + bound > incumbent_.best()) return;
    for (std::size_t j = from; j < candidates_.size(); ++j) {
      const Candidate& c = candidates_[j];
      if (size + c.size > incumbent_.best()) break;
      const SubsetMask next = alive & c.obeyed;
      // An implication killing nothing new is redundant in the final set,
      // which therefore cannot be optimal.
      if (next == alive) continue;
      chosen_.push_back(c.implication);
      descend(j + 1, next, size + c.size);
      chosen_.pop_back();
      if (incumbent_.aborted()) return;
    }
  }

  std::size_t n_;
  std::size_t subsets_;
  SubsetMask closed_;
  SubsetMask non_closed_;
  std::vector<Candidate> candidates_;
  std::vector<std::size_t> cheapest_kill_;
  std::vector<Implication> chosen_;
  Incumbent incumbent_;
};

}  // namespace

RightSums optimal_right_sums(const ImplicationSet& sigma,
                             const ClosureSystem& sys) {
  RightSums sums;
  for (AttrSet e : essential_sets(sys)) sums[e] = 0;
  for (const auto& [e, members] : group_by_essential(sigma, sys).by_essential) {
    for (const Implication& imp : members) sums[e] += imp.rhs.size();
  }
  return sums;
}

OptimalReport enumerate_optimal_bases(const ClosureSystem& sys,
                                      const SearchLimits& limits) {
  check_search_universe(sys.universe(), limits);
  RestrictedSearch search(sys, limits);
  return finish_report(sys, SearchSpace::kRestricted, search.run());
}

OptimalReport enumerate_optimal_bases_unrestricted(const ClosureSystem& sys,
                                                   const SearchLimits& limits) {
  check_search_universe(sys.universe(), limits);
  UnrestrictedSearch search(sys, limits);
  return finish_report(sys, SearchSpace::kUnrestricted, search.run());
}

bool minimal_generator_check(const ImplicationSet& sigma,
                             const ClosureSystem& sys) {
  require_enumerable(sys.universe());
  const Saturation sigma_of(sys);
  std::unordered_map<AttrSet::Bits, std::size_t> min_size;
  const AttrSet::Bits count = AttrSet::Bits{1} << sys.universe().size();
  for (AttrSet::Bits bits = 0; bits < count; ++bits) {
    const AttrSet s(bits);
    auto [it, inserted] = min_size.emplace(sigma_of(s).bits(), s.size());
    if (!inserted) it->second = std::min(it->second, s.size());
  }
  return std::all_of(sigma.begin(), sigma.end(), [&](const Implication& imp) {
    return imp.lhs.size() == min_size.at(sigma_of(imp.lhs).bits());
  });
}

bool verify_optright(const ClosureSystem& sys, const SearchLimits& limits) {
  const OptimalReport report = enumerate_optimal_bases(sys, limits);
  if (!report.complete) {
    throw BudgetExceeded("optimal search stopped after " +
                         std::to_string(report.candidates_evaluated) +
                         " candidates without completing");
  }
  return report.constancy;
}

}  // namespace closurekit
