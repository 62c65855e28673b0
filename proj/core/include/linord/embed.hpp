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

#ifndef LINORD_EMBED_HPP
#define LINORD_EMBED_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linord/analysis.hpp"
#include "linord/elem.hpp"
#include "linord/rational.hpp"
#include "linord/term.hpp"

namespace linord {

namespace detail {
struct DensePrefix;  // lazily materialized d_0, d_1, ... of a dense set
}

/// Incremental order embedding of a countable term into Q. With the
/// midpoint strategy new points are placed back-and-forth style: the first
/// point at 0, a point above everything placed at max+1, below everything
/// at min-1, and otherwise at the midpoint of its placed neighbours, so
/// order is preserved at every stage. A custom table fixes the images
/// instead (validated order-preserving up front).
class RationalEmbedding {
 public:
  /// Empty midpoint-strategy embedding.
  static RationalEmbedding back_and_forth(OrderTerm t);

  /// Table-driven embedding. Throws DomainError("order_violation") naming
  /// the violating pair, or DomainError("duplicate_element").
  static RationalEmbedding from_table(
      OrderTerm t, const std::vector<std::pair<Elem, Rational>>& table);

  /// Image of e, placing it first if new. Table strategy: lookup only;
  /// throws DomainError("table_incomplete") for unlisted elements.
  Rational place(const Elem& e);

  /// Image of an already-placed element.
  std::optional<Rational> image(const Elem& e) const;

  std::uint64_t size() const { return placements_.size(); }

  /// Placements in the order they were made.
  const std::vector<std::pair<Elem, Rational>>& placements() const {
    return placements_;
  }

 private:
  explicit RationalEmbedding(OrderTerm t, bool custom);

  OrderTerm term_;
  bool custom_;
  std::map<std::string, Rational> table_;   // custom strategy
  std::map<std::string, Rational> images_;  // by formatted element
  std::vector<std::pair<Elem, Rational>> by_order_;  // sorted by term order
  std::vector<std::pair<Elem, Rational>> placements_;
};

/// A sup-type real: a nondecreasing rational approximant v_N with the true
/// value certified to lie in [v_N, v_N + 2^-N]. Evaluation is pure;
/// instances are cheap shareable handles.
class StagedReal {
 public:
  /// v_N; nondecreasing in N.
  Rational lower(std::uint64_t stage) const;
  /// 2^-stage.
  static Rational error_bound(std::uint64_t stage) { return pow2(-static_cast<std::int64_t>(stage)); }

  struct Impl;
  explicit StagedReal(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Point of R x 2: a staged real with a bit, ordered lexicographically.
struct SplitPoint {
  StagedReal real;
  int bit = 0;
};

/// The textbook sup construction: the largest i-image of a D-member
/// d <= x among the first `stage` enumerated members of D (existing
/// endpoints are added to D first). Nondecreasing in stage. No error bound
/// is promised — with an adversarial i, distinct points can share the
/// limit; see collision_fixture(). Throws DomainError("no_lower_witness")
/// when no member below x has appeared yet.
Rational naive_e1(const OrderTerm& t, const DenseSet& d, RationalEmbedding& i,
                  const Elem& x, std::uint64_t stage);

/// The split bit: 1 iff x is outside D and has an immediate predecessor
/// (with D dense this is exactly "x exceeds the sup of its D-predecessors"),
/// else 0.
int jump_bit(const OrderTerm& t, const DenseSet& d, const Elem& x);

/// Stage and certified separation gap for a pair x < y: the least n with
/// x < d_n <= y, giving v_N(y) - v_N(x) >= 2^-n for every N >= n.
struct Separation {
  std::uint64_t stage = 0;
  Rational gap;
};

struct CertifiedOrder {
  enum class Route { Identical, Stage, JumpBits };
  Ordering order = Ordering::EQ;
  Route route = Route::Identical;
  std::optional<Separation> separation;  // Route::Stage
};

/// The robust universal embedding into R x 2. With D's enumeration
/// d_0, d_1, ... the real part is f(x) = sum of 2^-n over d_n <= x and the
/// bit comes from jump_bit. For every valid dense D: pairs separated by
/// some d in (x, y] get a certified gap of at least 2^-n at the witness
/// stage n; pairs with no such d are jumps with equal reals and bits 0/1.
/// Hence the map is injective and order-preserving — unlike naive_e1.
class UniversalEmbedding {
 public:
  /// D defaults to the canonical dense set with endpoints added. A supplied
  /// D is used as given after a budgeted density check (evidence level;
  /// throws DomainError("density_check_failed") with the offending pair).
  explicit UniversalEmbedding(OrderTerm t,
                              std::optional<DenseSet> dense = std::nullopt,
                              const DenseCheckParams& validation = {});

  SplitPoint map(const Elem& x) const;
  StagedReal real_part(const Elem& x) const;
  int bit_of(const Elem& x) const;

  const OrderTerm& term() const { return term_; }
  const DenseSet& dense() const { return dense_; }

  /// For x < y: the least separating stage, or nullopt when (x, y] misses
  /// D (decided structurally — then (x, y) is a jump and the reals agree
  /// exactly).
  std::optional<Separation> find_separator(const Elem& x, const Elem& y) const;

 private:
  OrderTerm term_;
  DenseSet dense_;
  std::shared_ptr<detail::DensePrefix> prefix_;
};

/// Decision procedure for the image order. Never reports EQ for distinct
/// elements: distinct pairs are either separated at a stage with a
/// certified gap or are jumps decided by the bits.
CertifiedOrder certified_compare(const UniversalEmbedding& emb, const Elem& x,
                                 const Elem& y);

/// Embedding into R alone, available exactly when the term embeds into R:
/// the weighted-sum construction over the union of the left- and
/// right-sided dense sets. Every jump's partners are in the set, so
/// distinct points always get a certified gap — no bit is needed.
class RealEmbedding {
 public:
  explicit RealEmbedding(OrderTerm t);

  StagedReal map(const Elem& x) const;
  const OrderTerm& term() const { return term_; }
  const DenseSet& dense() const { return dense_; }

  /// Always exists for x < y.
  Separation find_separator(const Elem& x, const Elem& y) const;

 private:
  OrderTerm term_;
  DenseSet dense_;
  std::shared_ptr<detail::DensePrefix> prefix_;
};

CertifiedOrder certified_compare(const RealEmbedding& emb, const Elem& x,
                                 const Elem& y);

/// A rational strictly between the images of a jump's partners (midpoint
/// of the certified gap at the witness stage). Distinct jumps receive
/// distinct rationals — the jump gaps are pairwise disjoint under a
/// monotone map.
Rational jump_rational(const RealEmbedding& emb, const Jump& j);

/// Regression record for the gap in the naive sup construction. On
/// t = w + fin(2) with x = 1:0, b = 1:1, D = the w part plus b, and the
/// adversarial order-preserving i with i(a_n) = -2^-n, i(b) = 0, the naive
/// map sends both x and b to (0, 0): the stage values at x converge to 0
/// from below while b attains 0 at a finite stage, and both bits are 0.
/// The robust embedding on the same t and D separates the pair with a
/// certified gap at the stage of b.
struct CollisionFixture {
  OrderTerm term;
  Elem x;
  Elem b;
  DenseSet dense;
  DenseCheckResult density_check;  // exhaustive on a 50-element truncation

  std::vector<std::pair<std::uint64_t, Rational>> naive_x_stages;
  Rational naive_x_limit;   // 0, the exact sup
  Rational naive_b_value;   // 0, attained at a finite stage
  int naive_bit_x = 0;
  int naive_bit_b = 0;
  bool naive_collision = false;

  Separation robust_separation;
  int robust_bit_x = 0;
  int robust_bit_b = 0;
  bool robust_separated = false;
};

CollisionFixture collision_fixture();

}  // namespace linord

#endif  // LINORD_EMBED_HPP
