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

#ifndef LINORD_ANALYSIS_HPP
#define LINORD_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linord/cardinal.hpp"
#include "linord/elem.hpp"
#include "linord/enumerate.hpp"
#include "linord/term.hpp"

namespace linord {

/// A pair x < y with empty open interval (x, y); x is the left partner,
/// y the right partner.
struct Jump {
  Elem left;
  Elem right;
};

/// Number of jumps, by structural recursion:
///   fin(n) -> Fin(max(n-1, 0));  w, w*, Z -> aleph0;  Q, R -> Fin(0);
///   sums add their parts' jumps plus one per adjacent boundary where the
///   left part has a maximum and the right part a minimum;
///   t*2 -> cardinality(t) + jump_cardinality(t)  (every point of the base
///   is doubled into a jump pair, and base jumps survive between pairs).
CardinalClass jump_cardinality(const OrderTerm& t);

/// Whether the order has a countable dense subset. All atoms are
/// separable (including R); a sum is separable iff all parts are; t*2 is
/// separable iff t is separable and has countably many jumps.
bool is_separable(const OrderTerm& t);

/// Separable with countably many jumps — equivalently left separable,
/// right separable, or order-embeddable into the real line.
bool embeds_into_reals(const OrderTerm& t);

struct JumpRelations {
  bool in_left = false;              // x has an immediate successor
  bool in_right = false;             // x has an immediate predecessor
  std::optional<bool> related;       // for a pair: one is the other's neighbor
};

/// Membership of x in the definable sets J_l (left jump partners) and J_r
/// (right jump partners), and, when y is given, whether (x, y) is in the
/// jump relation J. Requires a non-symbolic term.
JumpRelations jump_relations(const OrderTerm& t, const Elem& x,
                             const std::optional<Elem>& y = std::nullopt);

/// Enumerates all jumps of t without repetition, driven by the element
/// enumeration: (x, succ(x)) is emitted when x first appears. Requires
/// countably many jumps and a non-symbolic term.
class JumpStream {
 public:
  explicit JumpStream(const OrderTerm& t);
  std::optional<Jump> next();

 private:
  OrderTerm term_;
  ElemStream elems_;
  std::optional<std::uint64_t> remaining_;  // exact count when finite
};

/// A dense subset of a term's carrier: decidable membership plus, for
/// non-symbolic terms, an enumeration (the carrier enumeration filtered by
/// membership). Membership implies element validity.
class DenseSet {
 public:
  using MembershipFn = std::function<bool(const Elem&)>;

  DenseSet(OrderTerm term, MembershipFn member, std::string description,
           bool enumerable);

  /// False for invalid elements, never throws on them.
  bool contains(const Elem& e) const;

  const OrderTerm& term() const { return term_; }
  const std::string& description() const { return description_; }
  bool enumerable() const { return enumerable_; }

 private:
  OrderTerm term_;
  MembershipFn member_;
  std::string description_;
  bool enumerable_;
};

/// Cursor over a dense set's enumeration d_0, d_1, ... (the carrier
/// enumeration filtered by membership). position() counts emitted members.
class DenseStream {
 public:
  explicit DenseStream(const DenseSet& d);
  std::optional<Elem> next();
  std::uint64_t position() const { return emitted_; }

 private:
  OrderTerm term_;
  DenseSet::MembershipFn member_;
  ElemStream carrier_;
  std::uint64_t emitted_ = 0;
};

DenseStream enumerate_dense(const DenseSet& d);  // throws if not enumerable

/// The canonical dense set, by structural recursion: full carrier at the
/// countable atoms, Q at R; for sums, the union of the parts' sets plus
/// existing part endpoints; for t*2, D(t) x {0,1} together with left jump
/// partners at bit 1 and right jump partners at bit 0. Requires a
/// separable term.
DenseSet canonical_dense(const OrderTerm& t);

enum class DenseSide { Left, Right };

/// canonical_dense enriched so that every point is reached from the chosen
/// side: left adds all right jump partners plus the minimum, right adds all
/// left jump partners plus the maximum. Requires embeds_into_reals(t) —
/// otherwise the jump partners are uncountable and the set is rejected.
DenseSet sided_dense(const OrderTerm& t, DenseSide side);

/// D with existing endpoints added / with the listed elements removed.
DenseSet with_endpoints(const DenseSet& d);
DenseSet without_elements(const DenseSet& d, const std::vector<Elem>& omitted);

enum class DenseMode { Dense, Left, Right };

struct DenseCheckParams {
  std::uint64_t pairs = 200;
  std::uint64_t budget = 2000;
  DenseMode mode = DenseMode::Dense;
  std::uint64_t seed = 0;
};

struct DenseCheckResult {
  bool pass = false;
  /// Offending pair (a, b) with a < b (mode dense) or (y, x) (sided modes).
  std::optional<std::pair<Elem, Elem>> counterexample;
  std::uint64_t pairs_checked = 0;
  /// Every pair of the enumerated prefix was checked (a proof only when the
  /// prefix is the whole carrier).
  bool exhaustive = false;
};

/// Budgeted semi-decision of density. Mode dense: for sampled pairs a < b
/// from the first `budget` enumerated elements, any interval witness in
/// that prefix forces a witness among D's own enumerated members (scanned
/// up to a fixed multiple of the budget). Modes left/right: sampled points
/// must be reachable as sup/inf of such D-members from the given side.
/// A pass is evidence, not proof; a counterexample pair is returned exactly.
DenseCheckResult check_dense_sampled(const OrderTerm& t, const DenseSet& d,
                                     const DenseCheckParams& params);

/// Aggregate classification. The equivalence left separable == right
/// separable == (separable and countably many jumps) == embeds into R
/// holds by construction.
struct ClassReport {
  CardinalClass cardinality = CardinalClass::finite(0);
  CardinalClass jump_cardinality = CardinalClass::finite(0);
  bool separable = false;
  bool left_separable = false;
  bool right_separable = false;
  bool embeds_into_reals = false;
  bool has_min = false;
  bool has_max = false;
};

ClassReport classify(const OrderTerm& t);

/// Flat JSON object with exactly the report fields; cardinalities as
/// "fin:n" | "aleph0" | "continuum".
std::string to_json(const ClassReport& report);

}  // namespace linord

#endif  // LINORD_ANALYSIS_HPP
