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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace closurekit {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The universe is larger than the enumeration cap of the requested
/// operation.
class UniverseTooLarge : public Error {
 public:
  UniverseTooLarge(std::size_t size, std::size_t cap)
      : Error("universe has " + std::to_string(size) +
              " elements, enumeration cap is " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A basis handed to an operation requiring a valid basis is not one.
class InvalidBasis : public Error {
 public:
  using Error::Error;
};

/// One of the sources of a mix is not a valid basis.
class InvalidSourceBasis : public Error {
 public:
  explicit InvalidSourceBasis(std::size_t index)
      : Error("mix source " + std::to_string(index) +
              " is not a valid basis of the target system"),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class EssentialSetMismatch : public Error {
 public:
  using Error::Error;
};

/// The search exhausted its candidate budget before completing.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace closurekit
