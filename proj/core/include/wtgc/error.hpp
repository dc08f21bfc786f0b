// Copyright 2026 The wtgc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WTGC_ERROR_HPP
#define WTGC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wtgc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Semiring misuse: mixing descriptors, values outside the carrier, or a
/// homomorphism requested for a semiring that lacks the needed flags.
class SemiringError : public Error {
 public:
  using Error::Error;
};

/// A position that does not address a node of the tree it is applied to.
class InvalidPosition : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain (wrong grammar
/// class, mismatched alphabets, foreign production identifiers, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Syntax or arity error in a textual input, with a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wtgc

#endif  // WTGC_ERROR_HPP
