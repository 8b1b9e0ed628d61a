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

// Text formats and the command-line front end.
//
// System documents are line oriented. `#` starts a comment, blank lines are
// ignored, and the first significant line declares the universe:
//
//   universe: a b c
//   a -> b          # implication form; either side may be empty
//
// or, in family form, one closed set per line:
//
//   universe: a b
//   { }
//   { a b }
//
// A document uses one form only. A document with no body lines is an
// implication document with no implications.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "closurekit/mixing_optimal.hpp"

namespace closurekit {

struct SystemDocument {
  Universe universe;
  std::variant<ImplicationSet, SetFamily> body;

  bool is_implication_form() const {
    return std::holds_alternative<ImplicationSet>(body);
  }

  friend bool operator==(const SystemDocument&,
                         const SystemDocument&) = default;
};

/// Throws ParseError carrying the 1-based line of the offending input.
SystemDocument parse_document(std::string_view text);

std::string serialize_document(const SystemDocument& doc);

/// Implication documents generate their system by enumeration; family
/// documents must already be intersection-closed (NotIntersectionClosed
/// otherwise).
ClosureSystem to_system(const SystemDocument& doc);

/// Re-expresses sigma over another universe declaring the same names,
/// possibly in a different order. Throws PreconditionError otherwise.
ImplicationSet remap(const ImplicationSet& sigma, const Universe& from,
                     const Universe& to);

/// Comma-separated element names (`a,b`); the empty string is the empty set.
AttrSet parse_set_literal(const Universe& universe, std::string_view literal);

/// `{a} -> {a b}`.
std::string format_implication(const Universe& universe,
                               const Implication& imp);

/// `key: N` followed by one indented line per member.
std::string serialize_family(const Universe& universe, std::string_view key,
                             const SetFamily& fam);

std::string serialize_report(const Universe& universe,
                             const QuasiReport& report);
std::string serialize_report(const Universe& universe,
                             const BasisVerdict& verdict);
std::string serialize_report(const Universe& universe,
                             const OptimalReport& report);

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFails = 1,
  kExitInputError = 2,
  kExitLimitExceeded = 3,
};

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace closurekit
