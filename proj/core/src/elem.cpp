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

#include "linord/elem.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "linord/error.hpp"

namespace linord {

struct Elem::Node {
  ElemKind kind;
  Integer int_value;          // Nat / NegInt / Int
  Rational rat_value;         // Rat
  std::size_t index = 0;      // InSum
  std::optional<Elem> inner;  // InSum / Pair
  int bit = 0;                // Pair
};

namespace {

Integer to_integer(std::uint64_t n) {
  return Integer(static_cast<unsigned long>(n));
}

}  // namespace

Elem::Elem(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Elem Elem::nat(Integer k) {
  if (k < 0) throw InvalidElementError("Nat value must be >= 0");
  auto node = std::make_shared<Node>();
  node->kind = ElemKind::Nat;
  node->int_value = std::move(k);
  return Elem(std::move(node));
}

Elem Elem::neg_int(Integer k) {
  if (k > -1) throw InvalidElementError("NegInt value must be <= -1");
  auto node = std::make_shared<Node>();
  node->kind = ElemKind::NegInt;
  node->int_value = std::move(k);
  return Elem(std::move(node));
}

Elem Elem::integer(Integer k) {
  auto node = std::make_shared<Node>();
  node->kind = ElemKind::Int;
  node->int_value = std::move(k);
  return Elem(std::move(node));
}

Elem Elem::rational(Rational q) {
  q.canonicalize();
  auto node = std::make_shared<Node>();
  node->kind = ElemKind::Rat;
  node->rat_value = std::move(q);
  return Elem(std::move(node));
}

Elem Elem::in_sum(std::size_t index, Elem inner) {
  auto node = std::make_shared<Node>();
  node->kind = ElemKind::InSum;
  node->index = index;
  node->inner = std::move(inner);
  return Elem(std::move(node));
}

Elem Elem::pair(Elem inner, int bit) {
  if (bit != 0 && bit != 1) throw InvalidElementError("bit must be 0 or 1");
  auto node = std::make_shared<Node>();
  node->kind = ElemKind::Pair;
  node->inner = std::move(inner);
  node->bit = bit;
  return Elem(std::move(node));
}

ElemKind Elem::kind() const { return node_->kind; }

const Integer& Elem::int_value() const {
  if (node_->kind != ElemKind::Nat && node_->kind != ElemKind::NegInt &&
      node_->kind != ElemKind::Int) {
    throw InvalidElementError("int_value() on a non-integer element");
  }
  return node_->int_value;
}

const Rational& Elem::rat_value() const {
  if (node_->kind != ElemKind::Rat) {
    throw InvalidElementError("rat_value() on a non-rational element");
  }
  return node_->rat_value;
}

std::size_t Elem::sum_index() const {
  if (node_->kind != ElemKind::InSum) {
    throw InvalidElementError("sum_index() on a non-sum element");
  }
  return node_->index;
}

const Elem& Elem::inner() const {
  if (node_->kind != ElemKind::InSum && node_->kind != ElemKind::Pair) {
    throw InvalidElementError("inner() on a leaf element");
  }
  return *node_->inner;
}

int Elem::bit() const {
  if (node_->kind != ElemKind::Pair) {
    throw InvalidElementError("bit() on a non-pair element");
  }
  return node_->bit;
}

bool Elem::operator==(const Elem& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case ElemKind::Nat:
    case ElemKind::NegInt:
    case ElemKind::Int:
      return node_->int_value == other.node_->int_value;
    case ElemKind::Rat:
      return node_->rat_value == other.node_->rat_value;
    case ElemKind::InSum:
      return node_->index == other.node_->index && inner() == other.inner();
    case ElemKind::Pair:
      return node_->bit == other.node_->bit && inner() == other.inner();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Validity

namespace {

[[noreturn]] void invalid(const OrderTerm& t, const Elem& e, const std::string& why) {
  throw InvalidElementError("element " + format_elem(e) + " invalid for term " +
                            format_term(t) + ": " + why);
}

void validate_impl(const OrderTerm& t, const Elem& e, const Elem& whole) {
  switch (t.kind()) {
    case TermKind::Finite:
      if (e.kind() != ElemKind::Nat) invalid(t, whole, "expected a natural");
      if (e.int_value() >= to_integer(t.finite_size())) {
        invalid(t, whole, "natural out of range for fin(" +
                              std::to_string(t.finite_size()) + ")");
      }
      return;
    case TermKind::Omega:
      if (e.kind() != ElemKind::Nat) invalid(t, whole, "expected a natural");
      return;
    case TermKind::OmegaStar:
      if (e.kind() != ElemKind::NegInt) {
        invalid(t, whole, "expected a negative integer");
      }
      return;
    case TermKind::Ints:
      if (e.kind() != ElemKind::Int) invalid(t, whole, "expected an integer");
      return;
    case TermKind::Rats:
    case TermKind::Reals:
      // The representable points of R are exactly the rationals.
      if (e.kind() != ElemKind::Rat) invalid(t, whole, "expected a rational");
      return;
    case TermKind::Sum: {
      if (e.kind() != ElemKind::InSum) invalid(t, whole, "expected a sum point");
      if (e.sum_index() >= t.parts().size()) {
        invalid(t, whole, "part index out of range");
      }
      validate_impl(t.parts()[e.sum_index()], e.inner(), whole);
      return;
    }
    case TermKind::Times2:
      if (e.kind() != ElemKind::Pair) invalid(t, whole, "expected a pair");
      validate_impl(t.base(), e.inner(), whole);
      return;
  }
}

}  // namespace

void validate(const OrderTerm& t, const Elem& e) { validate_impl(t, e, e); }

bool is_valid(const OrderTerm& t, const Elem& e) {
  try {
    validate(t, e);
    return true;
  } catch (const InvalidElementError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

Ordering from_int(int c) {
  if (c < 0) return Ordering::LT;
  if (c > 0) return Ordering::GT;
  return Ordering::EQ;
}

Ordering compare_impl(const OrderTerm& t, const Elem& x, const Elem& y) {
  switch (t.kind()) {
    case TermKind::Finite:
    case TermKind::Omega:
    case TermKind::OmegaStar:
    case TermKind::Ints:
      return from_int(cmp(x.int_value(), y.int_value()));
    case TermKind::Rats:
    case TermKind::Reals:
      return from_int(cmp(x.rat_value(), y.rat_value()));
    case TermKind::Sum: {
      if (x.sum_index() != y.sum_index()) {
        return x.sum_index() < y.sum_index() ? Ordering::LT : Ordering::GT;
      }
      return compare_impl(t.parts()[x.sum_index()], x.inner(), y.inner());
    }
    case TermKind::Times2: {
      Ordering inner = compare_impl(t.base(), x.inner(), y.inner());
      if (inner != Ordering::EQ) return inner;
      return from_int(x.bit() - y.bit());
    }
  }
  throw DomainError("internal", "unknown term kind");
}

}  // namespace

Ordering compare(const OrderTerm& t, const Elem& x, const Elem& y) {
  if (contains_reals(t)) throw SymbolicTermError();
  validate(t, x);
  validate(t, y);
  return compare_impl(t, x, y);
}

namespace detail {

Ordering compare_repr(const OrderTerm& t, const Elem& x, const Elem& y) {
  validate(t, x);
  validate(t, y);
  return compare_impl(t, x, y);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bounds

TermBounds bounds(const OrderTerm& t) {
  TermBounds b;
  switch (t.kind()) {
    case TermKind::Finite:
      if (t.finite_size() >= 1) {
        b.has_min = b.has_max = true;
        b.min = Elem::nat(0);
        b.max = Elem::nat(to_integer(t.finite_size() - 1));
      }
      return b;
    case TermKind::Omega:
      b.has_min = true;
      b.min = Elem::nat(0);
      return b;
    case TermKind::OmegaStar:
      b.has_max = true;
      b.max = Elem::neg_int(-1);
      return b;
    case TermKind::Ints:
    case TermKind::Rats:
    case TermKind::Reals:
      return b;
    case TermKind::Sum: {
      const auto& parts = t.parts();
      TermBounds first = bounds(parts.front());
      TermBounds last = bounds(parts.back());
      if (first.has_min) {
        b.has_min = true;
        b.min = Elem::in_sum(0, *first.min);
      }
      if (last.has_max) {
        b.has_max = true;
        b.max = Elem::in_sum(parts.size() - 1, *last.max);
      }
      return b;
    }
    case TermKind::Times2: {
      TermBounds inner = bounds(t.base());
      if (inner.has_min) {
        b.has_min = true;
        b.min = Elem::pair(*inner.min, 0);
      }
      if (inner.has_max) {
        b.has_max = true;
        b.max = Elem::pair(*inner.max, 1);
      }
      return b;
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// Neighbors

namespace {

std::optional<Elem> neighbor_impl(const OrderTerm& t, const Elem& x, Side side) {
  switch (t.kind()) {
    case TermKind::Finite: {
      Integer k = x.int_value();
      if (side == Side::Succ) {
        if (k + 1 < to_integer(t.finite_size())) return Elem::nat(k + 1);
        return std::nullopt;
      }
      if (k >= 1) return Elem::nat(k - 1);
      return std::nullopt;
    }
    case TermKind::Omega: {
      Integer k = x.int_value();
      if (side == Side::Succ) return Elem::nat(k + 1);
      if (k >= 1) return Elem::nat(k - 1);
      return std::nullopt;
    }
    case TermKind::OmegaStar: {
      Integer k = x.int_value();  // k <= -1; -1 is the maximum
      if (side == Side::Succ) {
        if (k <= -2) return Elem::neg_int(k + 1);
        return std::nullopt;
      }
      return Elem::neg_int(k - 1);
    }
    case TermKind::Ints: {
      Integer k = x.int_value();
      if (side == Side::Succ) return Elem::integer(k + 1);
      return Elem::integer(k - 1);
    }
    case TermKind::Rats:
    case TermKind::Reals:
      return std::nullopt;  // dense
    case TermKind::Sum: {
      const auto& parts = t.parts();
      std::size_t i = x.sum_index();
      const OrderTerm& part = parts[i];
      if (auto within = neighbor_impl(part, x.inner(), side)) {
        return Elem::in_sum(i, *within);
      }
      TermBounds pb = bounds(part);
      if (side == Side::Succ) {
        // Hand-off happens only from the part's maximum into the next
        // part's minimum.
        if (pb.has_max && x.inner() == *pb.max && i + 1 < parts.size()) {
          TermBounds nb = bounds(parts[i + 1]);
          if (nb.has_min) return Elem::in_sum(i + 1, *nb.min);
        }
        return std::nullopt;
      }
      if (pb.has_min && x.inner() == *pb.min && i > 0) {
        TermBounds nb = bounds(parts[i - 1]);
        if (nb.has_max) return Elem::in_sum(i - 1, *nb.max);
      }
      return std::nullopt;
    }
    case TermKind::Times2: {
      const Elem& inner = x.inner();
      if (side == Side::Succ) {
        if (x.bit() == 0) return Elem::pair(inner, 1);
        if (auto s = neighbor_impl(t.base(), inner, Side::Succ)) {
          return Elem::pair(*s, 0);
        }
        return std::nullopt;
      }
      if (x.bit() == 1) return Elem::pair(inner, 0);
      if (auto p = neighbor_impl(t.base(), inner, Side::Pred)) {
        return Elem::pair(*p, 1);
      }
      return std::nullopt;
    }
  }
  throw DomainError("internal", "unknown term kind");
}

}  // namespace

std::optional<Elem> neighbor(const OrderTerm& t, const Elem& x, Side side) {
  if (contains_reals(t)) throw SymbolicTermError();
  validate(t, x);
  return neighbor_impl(t, x, side);
}

namespace detail {

std::optional<Elem> neighbor_repr(const OrderTerm& t, const Elem& x, Side side) {
  validate(t, x);
  return neighbor_impl(t, x, side);
}

bool has_neighbor_repr(const OrderTerm& t, const Elem& x, Side side) {
  return neighbor_repr(t, x, side).has_value();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Text form

std::string format_elem(const Elem& e) {
  switch (e.kind()) {
    case ElemKind::Nat:
    case ElemKind::NegInt:
    case ElemKind::Int:
      return to_string(e.int_value());
    case ElemKind::Rat:
      return to_string(e.rat_value());
    case ElemKind::InSum:
      return std::to_string(e.sum_index()) + ":" + format_elem(e.inner());
    case ElemKind::Pair:
      return format_elem(e.inner()) + "." + std::to_string(e.bit());
  }
  return "?";
}

namespace {

Elem parse_elem_impl(const OrderTerm& t, std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty element text");
  switch (t.kind()) {
    case TermKind::Finite:
    case TermKind::Omega:
      return Elem::nat(parse_integer(text));
    case TermKind::OmegaStar:
      return Elem::neg_int(parse_integer(text));
    case TermKind::Ints:
      return Elem::integer(parse_integer(text));
    case TermKind::Rats:
    case TermKind::Reals:
      return Elem::rational(parse_rational(text));
    case TermKind::Sum: {
      auto colon = text.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(0, "expected \"index:inner\" for a sum point");
      }
      Integer idx = parse_integer(text.substr(0, colon));
      if (idx < 0 || idx >= to_integer(t.parts().size())) {
        throw InvalidElementError("part index " + to_string(idx) +
                                  " out of range for " + format_term(t));
      }
      std::size_t i = static_cast<std::size_t>(idx.get_ui());
      return Elem::in_sum(i, parse_elem_impl(t.parts()[i], text.substr(colon + 1)));
    }
    case TermKind::Times2: {
      auto dot = text.rfind('.');
      if (dot == std::string_view::npos || dot + 2 != text.size() ||
          (text[dot + 1] != '0' && text[dot + 1] != '1')) {
        throw ParseError(text.size(), "expected \"inner.0\" or \"inner.1\"");
      }
      int bit = text[dot + 1] - '0';
      return Elem::pair(parse_elem_impl(t.base(), text.substr(0, dot)), bit);
    }
  }
  throw DomainError("internal", "unknown term kind");
}

}  // namespace

Elem parse_elem(const OrderTerm& t, std::string_view text) {
  Elem e = parse_elem_impl(t, text);
  validate(t, e);
  return e;
}

std::ostream& operator<<(std::ostream& os, const Elem& e) {
  return os << format_elem(e);
}

}  // namespace linord
