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

#ifndef LINORD_HOMOG_HPP
#define LINORD_HOMOG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linord/elem.hpp"
#include "linord/rational.hpp"
#include "linord/term.hpp"

namespace linord {

// Jump homogeneity, realized on Q*2 — the countable analogue of the split
// real line. In Q*2 every point is a jump partner: J_l is exactly the bit-0
// points, J_r the bit-1 points, and J pairs (q,0) with (q,1). A finite
// partial bijection preserving <, J_l, J_r and J therefore amounts to a
// bit-preserving, order-preserving map whose J-paired sources share a
// target rational, and each such map extends to a full automorphism by
// lifting a piecewise-linear bijection of the quotient Q through the
// projected control points. This reduction is asserted and tested, not
// assumed silently.

/// The fixed carrier term Q*2.
const OrderTerm& q_times2();

struct MapPair {
  Elem src;
  Elem dst;
};

/// Finite partial map on Q*2. Text form: one "src -> dst" pair per line,
/// with the element syntax of the carrier ("1/2.0 -> 3.0"). ';' is accepted
/// as a line separator so maps can be passed inline.
class PartialMap {
 public:
  explicit PartialMap(std::vector<MapPair> pairs);
  static PartialMap parse(std::string_view text);

  const std::vector<MapPair>& pairs() const { return pairs_; }
  std::string format() const;

 private:
  std::vector<MapPair> pairs_;
};

enum class ViolationKind { Order, JumpLeft, JumpRight, JumpPair };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  MapPair first;
  std::optional<MapPair> second;  // the partner pair for Order / JumpPair
};

struct ValidationResult {
  bool valid = false;
  std::optional<Violation> violation;
};

/// Checks preservation of <, J_l, J_r and J across all pairs and reports
/// the first violated relation with its witness. Scan order is fixed:
/// bits pair-by-pair, then J over index pairs, then order over index
/// pairs. Throws InvalidElementError for elements outside Q*2 and
/// DomainError("duplicate_source" / "duplicate_target") for repeats.
ValidationResult validate_partial_map(const PartialMap& pm);

/// Strictly increasing piecewise-linear bijection of Q: finitely many
/// control points with positive rational slopes between them and slope 1
/// outside their range. Exactly evaluable and exactly invertible.
class PiecewiseLinearMap {
 public:
  static PiecewiseLinearMap identity();
  /// Control points must be strictly increasing in both coordinates.
  static PiecewiseLinearMap through(
      std::vector<std::pair<Rational, Rational>> control);

  Rational eval(const Rational& x) const;
  PiecewiseLinearMap inverse() const;  // swap coordinates

  const std::vector<std::pair<Rational, Rational>>& control_points() const {
    return control_;
  }

 private:
  std::vector<std::pair<Rational, Rational>> control_;
};

enum class Direction { Fwd, Inv };

/// Automorphism of Q*2: a piecewise-linear bijection of the quotient Q
/// lifted by the identity on bits, (q, i) -> (base(q), i).
class Automorphism {
 public:
  static Automorphism identity();

  /// Extends a valid partial map: projects it to control points on the
  /// quotient, interpolates, and lifts. The result extends pm exactly and
  /// preserves <, J_l, J_r and J globally. Throws DomainError
  /// ("invalid_partial_map") carrying the violation for invalid input.
  static Automorphism extend(const PartialMap& pm);

  const PiecewiseLinearMap& base() const { return base_; }

  /// Exact application; apply(x, Inv) inverts apply(x, Fwd).
  Elem apply(const Elem& x, Direction dir) const;

  /// {"control_points": [["p","q"], ...], "tail_slope_left": "1",
  ///  "tail_slope_right": "1"}
  std::string to_json() const;

 private:
  explicit Automorphism(PiecewiseLinearMap base) : base_(std::move(base)) {}
  PiecewiseLinearMap base_;
};

/// J-class representative: the first coordinate. (q,0) and (q,1) collapse
/// to the same rational and the induced order on classes is the order of Q.
Rational quotient_map(const Elem& x);

}  // namespace linord

#endif  // LINORD_HOMOG_HPP
