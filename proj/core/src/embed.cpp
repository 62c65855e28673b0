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

#include "linord/embed.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "linord/error.hpp"

namespace linord {

namespace {

constexpr std::uint64_t kSeparatorCap = 1'000'000;

}  // namespace

namespace detail {

// Shared, lazily extended view of a dense set's enumeration. The mutex only
// guards cache growth; lookups of already-materialized entries are reads.
struct DensePrefix {
  explicit DensePrefix(DenseStream s) : stream(std::move(s)) {}

  const Elem* get(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu);
    while (!exhausted && elems.size() <= n) {
      auto e = stream.next();
      if (!e) {
        exhausted = true;
        break;
      }
      elems.push_back(std::move(*e));
    }
    return n < elems.size() ? &elems[n] : nullptr;
  }

  std::mutex mu;
  DenseStream stream;
  std::vector<Elem> elems;
  bool exhausted = false;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// RationalEmbedding

RationalEmbedding::RationalEmbedding(OrderTerm t, bool custom)
    : term_(std::move(t)), custom_(custom) {
  if (contains_reals(term_)) throw SymbolicTermError();
  if (!cardinality(term_).is_countable()) {
    throw DomainError("not_countable", "rational embeddings need a countable term");
  }
}

RationalEmbedding RationalEmbedding::back_and_forth(OrderTerm t) {
  return RationalEmbedding(std::move(t), false);
}

RationalEmbedding RationalEmbedding::from_table(
    OrderTerm t, const std::vector<std::pair<Elem, Rational>>& table) {
  RationalEmbedding emb(std::move(t), true);
  std::vector<std::pair<Elem, Rational>> sorted = table;
  for (const auto& entry : sorted) validate(emb.term_, entry.first);
  std::sort(sorted.begin(), sorted.end(),
            [&emb](const auto& a, const auto& b) {
              return compare(emb.term_, a.first, b.first) == Ordering::LT;
            });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const auto& a = sorted[i];
    const auto& b = sorted[i + 1];
    if (a.first == b.first) {
      throw DomainError("duplicate_element",
                        "custom table lists " + format_elem(a.first) + " twice");
    }
    if (!(a.second < b.second)) {
      throw DomainError(
          "order_violation",
          "custom table violates order on the pair " + format_elem(a.first) +
              " -> " + to_string(a.second) + ", " + format_elem(b.first) +
              " -> " + to_string(b.second));
    }
  }
  for (const auto& entry : sorted) {
    emb.table_.emplace(format_elem(entry.first), entry.second);
  }
  return emb;
}

Rational RationalEmbedding::place(const Elem& e) {
  validate(term_, e);
  std::string key = format_elem(e);
  if (auto it = images_.find(key); it != images_.end()) return it->second;

  auto pos = std::lower_bound(
      by_order_.begin(), by_order_.end(), e,
      [this](const std::pair<Elem, Rational>& entry, const Elem& value) {
        return compare(term_, entry.first, value) == Ordering::LT;
      });

  Rational img;
  if (custom_) {
    auto it = table_.find(key);
    if (it == table_.end()) {
      throw DomainError("table_incomplete",
                        "custom table has no image for " + key);
    }
    img = it->second;
  } else if (by_order_.empty()) {
    img = 0;
  } else if (pos == by_order_.begin()) {
    img = pos->second - 1;
  } else if (pos == by_order_.end()) {
    img = (pos - 1)->second + 1;
  } else {
    img = ((pos - 1)->second + pos->second) / 2;
  }

  by_order_.insert(pos, {e, img});
  images_.emplace(std::move(key), img);
  placements_.push_back({e, img});
  return img;
}

std::optional<Rational> RationalEmbedding::image(const Elem& e) const {
  auto it = images_.find(format_elem(e));
  if (it == images_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// StagedReal

struct StagedReal::Impl {
  OrderTerm term;
  Elem point;
  std::shared_ptr<detail::DensePrefix> prefix;
};

Rational StagedReal::lower(std::uint64_t stage) const {
  Rational v(0);
  for (std::uint64_t n = 0; n <= stage; ++n) {
    const Elem* d = impl_->prefix->get(n);
    if (!d) break;  // finite dense set: the missing tail only shrinks v
    if (compare(impl_->term, *d, impl_->point) != Ordering::GT) {
      v += pow2(-static_cast<std::int64_t>(n));
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// naive_e1 and the split bit

Rational naive_e1(const OrderTerm& t, const DenseSet& d, RationalEmbedding& i,
                  const Elem& x, std::uint64_t stage) {
  if (contains_reals(t)) throw SymbolicTermError();
  validate(t, x);
  DenseStream stream = enumerate_dense(with_endpoints(d));
  std::optional<Rational> best;
  for (std::uint64_t n = 0; n < stage; ++n) {
    auto dn = stream.next();
    if (!dn) break;
    Rational img = i.place(*dn);
    if (compare(t, *dn, x) != Ordering::GT) {  // d <= x
      if (!best || img > *best) best = img;
    }
  }
  if (!best) {
    throw DomainError("no_lower_witness",
                      "no dense member at or below " + format_elem(x) +
                          " within the first " + std::to_string(stage) +
                          " enumerated members");
  }
  return *best;
}

int jump_bit(const OrderTerm& t, const DenseSet& d, const Elem& x) {
  if (contains_reals(t)) throw SymbolicTermError();
  validate(t, x);
  if (d.contains(x)) return 0;
  // With D dense, x exceeds the sup of its D-predecessors exactly when it
  // has an immediate predecessor it is cut off by.
  return neighbor(t, x, Side::Pred) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// UniversalEmbedding

UniversalEmbedding::UniversalEmbedding(OrderTerm t, std::optional<DenseSet> dense,
                                       const DenseCheckParams& validation)
    : term_(std::move(t)),
      dense_(dense ? std::move(*dense)
                   : with_endpoints(canonical_dense(term_))) {
  if (contains_reals(term_)) throw SymbolicTermError();
  if (dense_.term() != term_) {
    throw DomainError("dense_term_mismatch",
                      "dense set was built for " + format_term(dense_.term()) +
                          ", not " + format_term(term_));
  }
  DenseCheckParams p = validation;
  p.mode = DenseMode::Dense;
  DenseCheckResult check = check_dense_sampled(term_, dense_, p);
  if (!check.pass) {
    std::string msg = "the supplied set fails the budgeted density check";
    if (check.counterexample) {
      msg += " on the interval (" + format_elem(check.counterexample->first) +
             ", " + format_elem(check.counterexample->second) + ")";
    }
    throw DomainError("density_check_failed", msg);
  }
  prefix_ = std::make_shared<detail::DensePrefix>(enumerate_dense(dense_));
}

StagedReal UniversalEmbedding::real_part(const Elem& x) const {
  validate(term_, x);
  auto impl = std::make_shared<const StagedReal::Impl>(
      StagedReal::Impl{term_, x, prefix_});
  return StagedReal(std::move(impl));
}

int UniversalEmbedding::bit_of(const Elem& x) const {
  return jump_bit(term_, dense_, x);
}

SplitPoint UniversalEmbedding::map(const Elem& x) const {
  return SplitPoint{real_part(x), bit_of(x)};
}

namespace {

std::optional<Separation> scan_separator(const OrderTerm& term,
                                         detail::DensePrefix& prefix,
                                         const Elem& x, const Elem& y) {
  for (std::uint64_t n = 0;; ++n) {
    if (n > kSeparatorCap) {
      throw DomainError("scan_budget_exhausted",
                        "separator scan exceeded the safety budget");
    }
    const Elem* d = prefix.get(n);
    if (!d) {
      throw DomainError("separator_not_found",
                        "dense enumeration exhausted without separating " +
                            format_elem(x) + " and " + format_elem(y) +
                            "; the supplied set is not dense");
    }
    if (compare(term, x, *d) == Ordering::LT &&
        compare(term, *d, y) != Ordering::GT) {
      return Separation{n, pow2(-static_cast<std::int64_t>(n))};
    }
  }
}

}  // namespace

std::optional<Separation> UniversalEmbedding::find_separator(
    const Elem& x, const Elem& y) const {
  validate(term_, x);
  validate(term_, y);
  if (compare(term_, x, y) != Ordering::LT) {
    throw DomainError("bad_pair", "find_separator requires x < y");
  }
  // (x, y] misses D exactly when (x, y) is a jump and y is outside D; the
  // density of D settles every other case, so the scan below terminates.
  auto succ = neighbor(term_, x, Side::Succ);
  if (succ && *succ == y && !dense_.contains(y)) return std::nullopt;
  return scan_separator(term_, *prefix_, x, y);
}

CertifiedOrder certified_compare(const UniversalEmbedding& emb, const Elem& x,
                                 const Elem& y) {
  Ordering c = compare(emb.term(), x, y);
  CertifiedOrder out;
  out.order = c;
  if (c == Ordering::EQ) {
    out.route = CertifiedOrder::Route::Identical;
    return out;
  }
  const Elem& lo = c == Ordering::LT ? x : y;
  const Elem& hi = c == Ordering::LT ? y : x;
  if (auto sep = emb.find_separator(lo, hi)) {
    out.route = CertifiedOrder::Route::Stage;
    out.separation = *sep;
  } else {
    out.route = CertifiedOrder::Route::JumpBits;  // equal reals, bits 0 and 1
  }
  return out;
}

// ---------------------------------------------------------------------------
// RealEmbedding

RealEmbedding::RealEmbedding(OrderTerm t)
    : term_(std::move(t)),
      dense_([this] {
        DenseSet left = sided_dense(term_, DenseSide::Left);
        DenseSet right = sided_dense(term_, DenseSide::Right);
        return DenseSet(
            term_,
            [left, right](const Elem& e) {
              return left.contains(e) || right.contains(e);
            },
            "sided-union", left.enumerable() && right.enumerable());
      }()) {
  if (contains_reals(term_)) throw SymbolicTermError();
  prefix_ = std::make_shared<detail::DensePrefix>(enumerate_dense(dense_));
}

StagedReal RealEmbedding::map(const Elem& x) const {
  validate(term_, x);
  auto impl = std::make_shared<const StagedReal::Impl>(
      StagedReal::Impl{term_, x, prefix_});
  return StagedReal(std::move(impl));
}

Separation RealEmbedding::find_separator(const Elem& x, const Elem& y) const {
  validate(term_, x);
  validate(term_, y);
  if (compare(term_, x, y) != Ordering::LT) {
    throw DomainError("bad_pair", "find_separator requires x < y");
  }
  // Every jump's right partner is in the sided union, so a separator in
  // (x, y] always exists.
  auto sep = scan_separator(term_, *prefix_, x, y);
  return *sep;
}

CertifiedOrder certified_compare(const RealEmbedding& emb, const Elem& x,
                                 const Elem& y) {
  Ordering c = compare(emb.term(), x, y);
  CertifiedOrder out;
  out.order = c;
  if (c == Ordering::EQ) {
    out.route = CertifiedOrder::Route::Identical;
    return out;
  }
  const Elem& lo = c == Ordering::LT ? x : y;
  const Elem& hi = c == Ordering::LT ? y : x;
  out.route = CertifiedOrder::Route::Stage;
  out.separation = emb.find_separator(lo, hi);
  return out;
}

Rational jump_rational(const RealEmbedding& emb, const Jump& j) {
  const OrderTerm& t = emb.term();
  validate(t, j.left);
  validate(t, j.right);
  auto succ = neighbor(t, j.left, Side::Succ);
  if (compare(t, j.left, j.right) != Ordering::LT || !succ ||
      !(*succ == j.right)) {
    throw DomainError("not_a_jump", "(" + format_elem(j.left) + ", " +
                                        format_elem(j.right) +
                                        ") is not a jump");
  }
  Separation sep = emb.find_separator(j.left, j.right);
  std::uint64_t eval_stage = sep.stage + 2;
  Rational vl = emb.map(j.left).lower(eval_stage);
  // Strictly above f(left) <= v + 2^-N and strictly below
  // f(right) >= v + 2^-n, since n < N.
  return vl + (StagedReal::error_bound(eval_stage) + sep.gap) / 2;
}

// ---------------------------------------------------------------------------
// Collision regression fixture

CollisionFixture collision_fixture() {
  OrderTerm t = parse_term("w+fin(2)");
  Elem x = parse_elem(t, "1:0");
  Elem b = parse_elem(t, "1:1");

  // D is the whole carrier minus x: the w part plus b. It contains the
  // minimum 0:0 and the maximum b, and it is dense (the only empty interval
  // at x is the jump (x, b)).
  DenseSet d = without_elements(canonical_dense(t), {x});

  DenseCheckParams exhaust;
  exhaust.budget = 50;
  exhaust.pairs = 50 * 49;  // all ordered pairs of the truncation
  exhaust.mode = DenseMode::Dense;
  DenseCheckResult density = check_dense_sampled(t, d, exhaust);

  // Adversarial order embedding i : D -> Q with i(a_n) = -2^-n and
  // i(b) = 0. It is order-preserving, yet the sup of i over the
  // a_n — which is what the naive construction assigns to x — equals
  // i(b) exactly. The table covers every stage the fixture evaluates.
  std::vector<std::pair<Elem, Rational>> table;
  for (std::uint64_t n = 0; n < 64; ++n) {
    table.push_back({Elem::in_sum(0, Elem::nat(Integer(static_cast<unsigned long>(n)))),
                     -pow2(-static_cast<std::int64_t>(n))});
  }
  table.push_back({b, Rational(0)});
  RationalEmbedding i = RationalEmbedding::from_table(t, table);

  const std::uint64_t stages[] = {3, 5, 10, 20, 50};
  std::vector<std::pair<std::uint64_t, Rational>> naive_x_stages;
  for (std::uint64_t stage : stages) {
    naive_x_stages.push_back({stage, naive_e1(t, d, i, x, stage)});
  }
  Rational naive_b_value = naive_e1(t, d, i, b, 50);
  int naive_bit_x = jump_bit(t, d, x);  // 0: x has no immediate predecessor
  int naive_bit_b = jump_bit(t, d, b);  // 0: b is in D

  // The stage values at x are -2^-(N-2): strictly below 0 but converging
  // to it exactly, so the naive image of x is (0, 0) = the naive image
  // of b.
  Rational naive_x_limit(0);
  bool naive_collision = true;
  for (const auto& [stage, value] : naive_x_stages) {
    if (!(value < naive_x_limit)) naive_collision = false;
    Rational gap_to_limit = naive_x_limit - value;
    if (gap_to_limit != pow2(-static_cast<std::int64_t>(stage - 2))) {
      naive_collision = false;  // convergence pattern broken
    }
  }
  if (naive_b_value != naive_x_limit) naive_collision = false;
  if (naive_bit_x != naive_bit_b) naive_collision = false;

  UniversalEmbedding robust(t, d);
  auto sep = robust.find_separator(x, b);
  bool robust_separated = false;
  Separation robust_separation;
  if (sep) {
    robust_separation = *sep;
    Rational vx = robust.real_part(x).lower(sep->stage);
    Rational vb = robust.real_part(b).lower(sep->stage);
    robust_separated = vb - vx >= sep->gap;
  }

  return CollisionFixture{
      t,
      x,
      b,
      d,
      density,
      std::move(naive_x_stages),
      naive_x_limit,
      naive_b_value,
      naive_bit_x,
      naive_bit_b,
      naive_collision,
      robust_separation,
      robust.bit_of(x),
      robust.bit_of(b),
      robust_separated,
  };
}

}  // namespace linord
