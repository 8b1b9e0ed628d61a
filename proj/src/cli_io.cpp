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

#include "closurekit/cli_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace closurekit {

namespace {

constexpr std::string_view kWhitespace = " \t\r\f\v";
constexpr std::string_view kArrow = "->";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kWhitespace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (true) {
    pos = s.find_first_not_of(kWhitespace, pos);
    if (pos == std::string_view::npos) break;
    auto end = s.find_first_of(kWhitespace, pos);
    if (end == std::string_view::npos) end = s.size();
    words.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

bool valid_name(std::string_view name) {
  return !name.empty() &&
         name.find_first_of("{},#") == std::string_view::npos &&
         name.find(kArrow) == std::string_view::npos;
}

AttrSet parse_side(const Universe& universe, std::string_view text,
                   std::size_t line) {
  AttrSet out;
  for (std::string_view word : split_words(text)) {
    auto idx = universe.index_of(word);
    if (!idx) {
      throw ParseError(line, "unknown element '" + std::string(word) + "'");
    }
    out = out.with(*idx);
  }
  return out;
}

std::string join_names(const Universe& universe, AttrSet s) {
  std::string out;
  for (std::size_t i : s.indices()) {
    if (!out.empty()) out += ' ';
    out += universe.name(i);
  }
  return out;
}

}  // namespace

SystemDocument parse_document(std::string_view text) {
  enum class Form { kUnknown, kImplications, kFamily };

  std::optional<Universe> universe;
  Form form = Form::kUnknown;
  std::vector<Implication> implications;
  std::vector<AttrSet> members;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    constexpr std::string_view kUniverseKey = "universe:";
    if (line.starts_with(kUniverseKey)) {
      if (universe) throw ParseError(line_no, "duplicate universe line");
      std::vector<std::string> names;
      for (std::string_view word :
           split_words(line.substr(kUniverseKey.size()))) {
        if (!valid_name(word)) {
          throw ParseError(line_no,
                           "invalid element name '" + std::string(word) + "'");
        }
        names.emplace_back(word);
      }
      try {
        universe.emplace(std::move(names));
      } catch (const PreconditionError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (!universe) {
      throw ParseError(line_no, "missing universe line");
    }

    Form line_form = Form::kUnknown;
    if (line.front() == '{') {
      if (line.back() != '}') {
        throw ParseError(line_no, "unterminated set, expected '}'");
      }
      line_form = Form::kFamily;
      std::string_view inner = line.substr(1, line.size() - 2);
      if (inner.find_first_of("{}") != std::string_view::npos) {
        throw ParseError(line_no, "nested braces in set");
      }
      members.push_back(parse_side(*universe, inner, line_no));
    } else if (auto arrow = line.find(kArrow);
               arrow != std::string_view::npos) {
      line_form = Form::kImplications;
      std::string_view lhs = line.substr(0, arrow);
      std::string_view rhs = line.substr(arrow + kArrow.size());
      if (rhs.find(kArrow) != std::string_view::npos) {
        throw ParseError(line_no, "more than one '->' on a line");
      }
      implications.push_back({parse_side(*universe, lhs, line_no),
                              parse_side(*universe, rhs, line_no)});
    } else {
      throw ParseError(line_no, "expected an implication 'A -> B' or a set "
                                "'{ ... }'");
    }

    if (form != Form::kUnknown && form != line_form) {
      throw ParseError(line_no,
                       "document mixes implication and family lines");
    }
    form = line_form;
  }

  if (!universe) throw ParseError(0, "missing universe line");
  if (form == Form::kFamily) {
    return {std::move(*universe), SetFamily(std::move(members))};
  }
  return {std::move(*universe), ImplicationSet(std::move(implications))};
}

std::string serialize_document(const SystemDocument& doc) {
  std::string out = "universe:";
  for (const std::string& name : doc.universe.names()) out += " " + name;
  out += '\n';
  if (const auto* sigma = std::get_if<ImplicationSet>(&doc.body)) {
    for (const Implication& imp : *sigma) {
      std::string lhs = join_names(doc.universe, imp.lhs);
      std::string rhs = join_names(doc.universe, imp.rhs);
      out += lhs;
      out += lhs.empty() ? "->" : " ->";
      if (!rhs.empty()) out += " " + rhs;
      out += '\n';
    }
  } else {
    for (AttrSet s : std::get<SetFamily>(doc.body)) {
      std::string names = join_names(doc.universe, s);
      out += names.empty() ? "{ }\n" : "{ " + names + " }\n";
    }
  }
  return out;
}

ClosureSystem to_system(const SystemDocument& doc) {
  if (const auto* sigma = std::get_if<ImplicationSet>(&doc.body)) {
    return system_from_implications(*sigma, doc.universe);
  }
  return ClosureSystem(doc.universe, std::get<SetFamily>(doc.body));
}

ImplicationSet remap(const ImplicationSet& sigma, const Universe& from,
                     const Universe& to) {
  if (from == to) return sigma;
  if (from.size() != to.size()) {
    throw PreconditionError("universes declare different elements");
  }
  std::vector<std::size_t> target(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto idx = to.index_of(from.name(i));
    if (!idx) {
      throw PreconditionError("element '" + from.name(i) +
                              "' is not in the target universe");
    }
    target[i] = *idx;
  }
  auto move_set = [&](AttrSet s) {
    AttrSet out;
    for (std::size_t i : s.indices()) out = out.with(target[i]);
    return out;
  };
  std::vector<Implication> out;
  for (const Implication& imp : sigma) {
    out.push_back({move_set(imp.lhs), move_set(imp.rhs)});
  }
  return ImplicationSet(std::move(out));
}

AttrSet parse_set_literal(const Universe& universe, std::string_view literal) {
  AttrSet out;
  literal = trim(literal);
  if (literal.empty()) return out;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    auto comma = literal.find(',', pos);
    if (comma == std::string_view::npos) comma = literal.size();
    std::string_view name = trim(literal.substr(pos, comma - pos));
    auto idx = universe.index_of(name);
    if (!idx) {
      throw PreconditionError("unknown element '" + std::string(name) +
                              "' in set literal");
    }
    out = out.with(*idx);
    pos = comma + 1;
  }
  return out;
}

std::string format_implication(const Universe& universe,
                               const Implication& imp) {
  return universe.format(imp.lhs) + " -> " + universe.format(imp.rhs);
}

std::string serialize_family(const Universe& universe, std::string_view key,
                             const SetFamily& fam) {
  std::string out(key);
  out += ": " + std::to_string(fam.size()) + "\n";
  for (AttrSet s : fam) out += "  " + universe.format(s) + "\n";
  return out;
}

std::string serialize_report(const Universe& universe,
                             const QuasiReport& report) {
  return serialize_family(universe, "quasi_closed", report.quasi_closed) +
         serialize_family(universe, "critical", report.critical) +
         serialize_family(universe, "essential", report.essential) +
         serialize_family(universe, "saturation_family",
                          report.saturation_family);
}

std::string serialize_report(const Universe& universe,
                             const BasisVerdict& verdict) {
  if (verdict.equivalent()) return "equivalent: true\n";
  std::string out = "equivalent: false\nviolation: ";
  if (const auto* rhs = std::get_if<RhsExceedsClosure>(&*verdict.violation)) {
    out += "rhs-exceeds-closure " +
           format_implication(universe, rhs->implication);
  } else {
    out += "unrefuted-quasi-closed " +
           universe.format(
               std::get<UnrefutedQuasiClosed>(*verdict.violation).quasi_closed);
  }
  return out + "\n";
}

std::string serialize_report(const Universe& universe,
                             const OptimalReport& report) {
  std::ostringstream out;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "search_space: "
      << (report.space == SearchSpace::kRestricted ? "restricted"
                                                   : "unrestricted")
      << "\n";
  out << "complete: " << flag(report.complete) << "\n";
  out << "candidates_evaluated: " << report.candidates_evaluated << "\n";
  out << "optimal_size: " << report.optimal_size << "\n";
  out << "optimal_bases: " << report.optimal_bases.size() << "\n";
  for (std::size_t i = 0; i < report.optimal_bases.size(); ++i) {
    out << "basis " << i + 1 << ":\n";
    for (const Implication& imp : report.optimal_bases[i]) {
      out << "  " << format_implication(universe, imp) << "\n";
    }
    out << "right_sums " << i + 1 << ":\n";
    for (const auto& [essential, sum] : report.right_sums[i]) {
      out << "  " << universe.format(essential) << ": " << sum << "\n";
    }
    out << "lhs_saturations " << i + 1 << ":\n";
    for (const auto& [essential, sats] : report.lhs_saturations[i]) {
      out << "  " << universe.format(essential) << ":";
      for (AttrSet s : sats) out << " " << universe.format(s);
      out << "\n";
    }
  }
  out << "constancy: " << flag(report.constancy) << "\n";
  out << "lhs_saturations_coincide: " << flag(report.lhs_saturations_coincide)
      << "\n";
  return out.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SystemDocument load_document(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

ImplicationSet load_basis(const std::string& path, const Universe& target) {
  SystemDocument doc = load_document(path);
  const auto* sigma = std::get_if<ImplicationSet>(&doc.body);
  if (sigma == nullptr) {
    throw PreconditionError(path + ": basis must be an implication document");
  }
  return remap(*sigma, doc.universe, target);
}

struct Args {
  std::string file;
  std::string of;
  std::string basis;
  std::vector<std::string> sources;
  std::uint64_t budget = kDefaultCandidateBudget;
  std::size_t max_universe = kDefaultOptimalUniverse;
  bool unrestricted = false;
};

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Closure systems, quasi-closed sets and implication bases",
               "closurekit"};
  app.require_subcommand(1);
  Args a;

  auto with_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", a.file, "System document")->required();
    return sub;
  };
  CLI::App* closure = with_file("closure", "Closure of a set");
  closure->add_option("--of", a.of, "Comma-separated set, e.g. a,b")
      ->required();
  CLI::App* closed = with_file("closed-sets", "List all closed sets");
  CLI::App* quasi = with_file("quasi", "Quasi-closed, critical, essential "
                                       "sets and the saturation family");
  CLI::App* critical = with_file("critical", "Critical sets");
  CLI::App* essential = with_file("essential", "Essential sets");
  CLI::App* saturate = with_file("saturation", "Saturation of a set");
  saturate->add_option("--of", a.of, "Comma-separated set, e.g. a,b")
      ->required();
  CLI::App* canonical = with_file("canonical", "Canonical basis");
  CLI::App* check = with_file("check", "Check whether a basis generates the "
                                       "system");
  check->add_option("--basis", a.basis, "Implication document")->required();
  CLI::App* mix = with_file("mix", "Mix bases across essential sets");
  mix->add_option("--sources", a.sources,
                  "One basis per essential set, in canonical essential order")
      ->required();
  auto add_search_options = [&](CLI::App* sub) {
    sub->add_option("--budget", a.budget, "Candidate budget");
    sub->add_option("--max-universe", a.max_universe,
                    "Universe cap for the search");
  };
  CLI::App* optimal = with_file("optimal", "Enumerate optimal bases");
  add_search_options(optimal);
  optimal->add_flag("--unrestricted", a.unrestricted,
                    "Search arbitrary implication sets");
  CLI::App* optright = with_file(
      "verify-optright",
      "Check that right-side mass per essential set is fixed across optimal "
      "bases");
  add_search_options(optright);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const SystemDocument doc = load_document(a.file);
    const Universe& universe = doc.universe;
    const ClosureSystem sys = to_system(doc);
    SearchLimits limits;
    limits.candidate_budget = a.budget;
    limits.max_universe = a.max_universe;

    if (app.got_subcommand(closure)) {
      out << universe.format(
                 closure_from_family(sys, parse_set_literal(universe, a.of)))
          << "\n";
    } else if (app.got_subcommand(closed)) {
      out << serialize_family(universe, "closed", sys.closed());
    } else if (app.got_subcommand(quasi)) {
      out << serialize_report(universe, analyze(sys));
    } else if (app.got_subcommand(critical)) {
      out << serialize_family(universe, "critical", critical_sets(sys));
    } else if (app.got_subcommand(essential)) {
      out << serialize_family(universe, "essential", essential_sets(sys));
    } else if (app.got_subcommand(saturate)) {
      out << universe.format(
                 saturation(sys, parse_set_literal(universe, a.of)))
          << "\n";
    } else if (app.got_subcommand(canonical)) {
      out << serialize_document({universe, canonical_basis(sys)});
    } else if (app.got_subcommand(check)) {
      const BasisVerdict verdict =
          check_basis(load_basis(a.basis, universe), sys);
      out << serialize_report(universe, verdict);
      return verdict.equivalent() ? kExitOk : kExitPropertyFails;
    } else if (app.got_subcommand(mix)) {
      std::vector<ImplicationSet> bases;
      for (const std::string& path : a.sources) {
        bases.push_back(load_basis(path, universe));
      }
      const ImplicationSet mixed =
          mix_bases(assign_in_essential_order(sys, std::move(bases)), sys);
      out << serialize_document({universe, mixed});
    } else if (app.got_subcommand(optimal)) {
      const OptimalReport report =
          a.unrestricted ? enumerate_optimal_bases_unrestricted(sys, limits)
                         : enumerate_optimal_bases(sys, limits);
      out << serialize_report(universe, report);
      if (!report.complete) return kExitLimitExceeded;
      return report.constancy ? kExitOk : kExitPropertyFails;
    } else if (app.got_subcommand(optright)) {
      const OptimalReport report = enumerate_optimal_bases(sys, limits);
      out << serialize_report(universe, report);
      if (!report.complete) {
        err << "error: search budget exhausted\n";
        return kExitLimitExceeded;
      }
      out << "optright: " << (report.constancy ? "true" : "false") << "\n";
      return report.constancy ? kExitOk : kExitPropertyFails;
    }
    return kExitOk;
  } catch (const UniverseTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimitExceeded;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimitExceeded;
  } catch (const InvalidSourceBasis& e) {
    err << "error: " << e.what() << " (" << a.sources.at(e.index()) << ")\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "property violated: " << e.what() << "\n";
    return kExitPropertyFails;
  }
}

}  // namespace closurekit
