/*
 * Copyright 2026 The linord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LINORD_ERROR_HPP
#define LINORD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linord {

/// Base of all library failures. `code()` is the stable machine-readable
/// identifier that the CLI surfaces in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Syntax error in a term, element or map text. Position is a 0-based
/// byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse_error",
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised by element-level operations on terms containing the R atom,
/// which is classification-only.
class SymbolicTermError : public Error {
 public:
  explicit SymbolicTermError(
      const std::string& what =
          "term contains R; element-level operations are unavailable")
      : Error("symbolic_term", what) {}
};

class InvalidElementError : public Error {
 public:
  explicit InvalidElementError(const std::string& what)
      : Error("invalid_element", what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error("overflow", what) {}
};

/// Precondition failures: non-separable terms, uncountable jump sets,
/// rejected dense sets, order violations in user tables, and so on.
class DomainError : public Error {
 public:
  DomainError(std::string code, const std::string& what)
      : Error(std::move(code), what) {}
};

}  // namespace linord

#endif  // LINORD_ERROR_HPP
