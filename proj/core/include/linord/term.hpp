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

#ifndef LINORD_TERM_HPP
#define LINORD_TERM_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "linord/cardinal.hpp"

namespace linord {

enum class TermKind { Finite, Omega, OmegaStar, Ints, Rats, Reals, Sum, Times2 };

/// Structural description of a linear order: a finite chain, one of the
/// named infinite atoms (w, w*, Z, Q, R), an ordered sum, or the
/// lexicographic product with the two-point chain (the "*2" split that
/// doubles every point into a jump pair).
///
/// Terms are immutable values; copies share nodes and are cheap. The R atom
/// is classification-only: terms containing it support the structural
/// predicates but refuse element-level work.
class OrderTerm {
 public:
  static OrderTerm finite(std::uint64_t n);
  static OrderTerm omega();
  static OrderTerm omega_star();
  static OrderTerm ints();
  static OrderTerm rats();
  static OrderTerm reals();
  /// Ordered sum of the given parts, left to right. Construction is
  /// permissive; normalize() enforces the >= 2 parts shape.
  static OrderTerm sum(std::vector<OrderTerm> parts);
  static OrderTerm times2(OrderTerm base);

  TermKind kind() const;
  std::uint64_t finite_size() const;            // Finite only
  const std::vector<OrderTerm>& parts() const;  // Sum only
  const OrderTerm& base() const;                // Times2 only

  /// Structural equality.
  bool operator==(const OrderTerm& other) const;
  bool operator!=(const OrderTerm& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit OrderTerm(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

/// Drops empty parts from sums, collapses sums with fewer than two
/// remaining parts, and collapses *2 products of the empty order.
/// Idempotent: normalize(normalize(t)) == normalize(t).
OrderTerm normalize(const OrderTerm& t);

/// True iff the R atom occurs anywhere in the term.
bool contains_reals(const OrderTerm& t);

/// Carrier size. Finite(n) -> Fin(n); w, w*, Z, Q -> aleph0; R -> continuum;
/// sums add; *2 doubles.
CardinalClass cardinality(const OrderTerm& t);

/// Grammar:  sum  := prod ("+" prod)*
///           prod := atom ("*2")*
///           atom := "fin(" nat ")" | "Z" | "Q" | "R" | "w" | "w*" | "(" term ")"
/// "omega"/"omega*" are synonyms of "w"/"w*". "*2" binds tighter than "+".
/// The result is normalized. Throws ParseError (with position) on syntax
/// errors and on fin(n) counts that do not fit 64 bits.
OrderTerm parse_term(std::string_view text);

/// Inverse of parse_term up to normalization:
/// parse_term(format_term(t)) == normalize(t).
std::string format_term(const OrderTerm& t);

std::ostream& operator<<(std::ostream& os, const OrderTerm& t);

}  // namespace linord

#endif  // LINORD_TERM_HPP
