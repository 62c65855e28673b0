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

#ifndef LINORD_ELEM_HPP
#define LINORD_ELEM_HPP

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "linord/rational.hpp"
#include "linord/term.hpp"

namespace linord {

enum class ElemKind { Nat, NegInt, Int, Rat, InSum, Pair };

enum class Ordering { LT, EQ, GT };

enum class Side { Pred, Succ };

/// A finitely represented point of a term: a natural for fin(n)/w, a
/// negative integer for w*, an integer for Z, a reduced rational for Q,
/// a (part index, inner point) for sums, and an (inner point, bit) for *2
/// products. Validity is relative to a term; two valid points of the same
/// term are equal as order points iff they are structurally equal.
class Elem {
 public:
  static Elem nat(Integer k);        // k >= 0
  static Elem neg_int(Integer k);    // k <= -1
  static Elem integer(Integer k);
  static Elem rational(Rational q);  // canonicalized on construction
  static Elem in_sum(std::size_t index, Elem inner);
  static Elem pair(Elem inner, int bit);  // bit in {0, 1}

  ElemKind kind() const;
  const Integer& int_value() const;   // Nat / NegInt / Int
  const Rational& rat_value() const;  // Rat
  std::size_t sum_index() const;      // InSum
  const Elem& inner() const;          // InSum / Pair
  int bit() const;                    // Pair

  bool operator==(const Elem& other) const;
  bool operator!=(const Elem& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Elem(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

/// Checks e structurally against t; throws InvalidElementError with the
/// offending component. At an R atom the representable points are exactly
/// the rationals, so a Rat value is accepted there (classification-level
/// semantics; element-level operations still refuse such terms).
void validate(const OrderTerm& t, const Elem& e);
bool is_valid(const OrderTerm& t, const Elem& e);

/// Total order on valid points of t. Sums compare the part index first,
/// then the inner point; *2 products compare the inner point first, then
/// the bit. Throws SymbolicTermError if t contains R.
Ordering compare(const OrderTerm& t, const Elem& x, const Elem& y);

struct TermBounds {
  bool has_min = false;
  bool has_max = false;
  std::optional<Elem> min;  // present iff has_min
  std::optional<Elem> max;  // present iff has_max
};

/// First/last points by structural recursion: fin(n>=1) has both, w a
/// minimum only, w* a maximum only, Z/Q/R neither; a sum takes its minimum
/// from the first part and its maximum from the last; t*2 has (min,0) and
/// (max,1) when the base has them.
TermBounds bounds(const OrderTerm& t);

/// Immediate successor/predecessor iff one exists. Throws
/// SymbolicTermError if t contains R.
std::optional<Elem> neighbor(const OrderTerm& t, const Elem& x, Side side);

/// Text form: naturals "k", integers signed "k", rationals "p/q" or "k",
/// sum points "i:inner", product points "inner.0" / "inner.1". Formatting
/// needs no term; parsing is term-directed. Round-trips bit-exactly.
std::string format_elem(const Elem& e);
Elem parse_elem(const OrderTerm& t, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Elem& e);

namespace detail {

// Classification-level variants without the symbolic-term gate: on terms
// containing R they operate on the representable (rational-coordinate)
// points, treating R the way Q is treated. Dense-set membership on
// separable symbolic terms is built from these. Both require valid
// arguments.
Ordering compare_repr(const OrderTerm& t, const Elem& x, const Elem& y);
std::optional<Elem> neighbor_repr(const OrderTerm& t, const Elem& x, Side side);
bool has_neighbor_repr(const OrderTerm& t, const Elem& x, Side side);

}  // namespace detail

}  // namespace linord

#endif  // LINORD_ELEM_HPP
