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

#include "linord/term.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <utility>

#include "linord/error.hpp"

namespace linord {

struct OrderTerm::Node {
  TermKind kind;
  std::uint64_t n = 0;           // Finite
  std::vector<OrderTerm> parts;  // Sum; Times2 stores its base in parts[0]
};

OrderTerm::OrderTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

OrderTerm OrderTerm::finite(std::uint64_t n) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Finite;
  node->n = n;
  return OrderTerm(std::move(node));
}

OrderTerm OrderTerm::omega() {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Omega;
  return OrderTerm(std::move(node));
}

OrderTerm OrderTerm::omega_star() {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::OmegaStar;
  return OrderTerm(std::move(node));
}

OrderTerm OrderTerm::ints() {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Ints;
  return OrderTerm(std::move(node));
}

OrderTerm OrderTerm::rats() {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Rats;
  return OrderTerm(std::move(node));
}

OrderTerm OrderTerm::reals() {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Reals;
  return OrderTerm(std::move(node));
}

OrderTerm OrderTerm::sum(std::vector<OrderTerm> parts) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Sum;
  node->parts = std::move(parts);
  return OrderTerm(std::move(node));
}

OrderTerm OrderTerm::times2(OrderTerm base) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Times2;
  node->parts.push_back(std::move(base));
  return OrderTerm(std::move(node));
}

TermKind OrderTerm::kind() const { return node_->kind; }

std::uint64_t OrderTerm::finite_size() const {
  if (node_->kind != TermKind::Finite) {
    throw DomainError("not_finite_term", "finite_size() on a non-Finite term");
  }
  return node_->n;
}

const std::vector<OrderTerm>& OrderTerm::parts() const {
  if (node_->kind != TermKind::Sum) {
    throw DomainError("not_sum_term", "parts() on a non-Sum term");
  }
  return node_->parts;
}

const OrderTerm& OrderTerm::base() const {
  if (node_->kind != TermKind::Times2) {
    throw DomainError("not_times2_term", "base() on a non-Times2 term");
  }
  return node_->parts[0];
}

bool OrderTerm::operator==(const OrderTerm& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case TermKind::Finite:
      return node_->n == other.node_->n;
    case TermKind::Sum:
    case TermKind::Times2: {
      if (node_->parts.size() != other.node_->parts.size()) return false;
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        if (node_->parts[i] != other.node_->parts[i]) return false;
      }
      return true;
    }
    default:
      return true;
  }
}

OrderTerm normalize(const OrderTerm& t) {
  switch (t.kind()) {
    case TermKind::Sum: {
      std::vector<OrderTerm> kept;
      for (const OrderTerm& part : t.parts()) {
        OrderTerm p = normalize(part);
        if (p.kind() == TermKind::Finite && p.finite_size() == 0) continue;
        kept.push_back(std::move(p));
      }
      if (kept.empty()) return OrderTerm::finite(0);
      if (kept.size() == 1) return kept[0];
      return OrderTerm::sum(std::move(kept));
    }
    case TermKind::Times2: {
      OrderTerm b = normalize(t.base());
      if (b.kind() == TermKind::Finite && b.finite_size() == 0) {
        return OrderTerm::finite(0);  // the doubled empty order is empty
      }
      return OrderTerm::times2(std::move(b));
    }
    default:
      return t;
  }
}

bool contains_reals(const OrderTerm& t) {
  switch (t.kind()) {
    case TermKind::Reals:
      return true;
    case TermKind::Sum:
      for (const OrderTerm& part : t.parts()) {
        if (contains_reals(part)) return true;
      }
      return false;
    case TermKind::Times2:
      return contains_reals(t.base());
    default:
      return false;
  }
}

CardinalClass cardinality(const OrderTerm& t) {
  switch (t.kind()) {
    case TermKind::Finite:
      return CardinalClass::finite(t.finite_size());
    case TermKind::Omega:
    case TermKind::OmegaStar:
    case TermKind::Ints:
    case TermKind::Rats:
      return CardinalClass::aleph0();
    case TermKind::Reals:
      return CardinalClass::continuum();
    case TermKind::Sum: {
      CardinalClass total = CardinalClass::finite(0);
      for (const OrderTerm& part : t.parts()) total = total + cardinality(part);
      return total;
    }
    case TermKind::Times2:
      return cardinality(t.base()).doubled();
  }
  throw DomainError("internal", "unknown term kind");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  OrderTerm parse() {
    OrderTerm t = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected trailing input");
    }
    return t;
  }

 private:
  OrderTerm parse_sum() {
    std::vector<OrderTerm> parts;
    parts.push_back(parse_prod());
    while (true) {
      skip_ws();
      if (!eat('+')) break;
      parts.push_back(parse_prod());
    }
    if (parts.size() == 1) return parts[0];
    return OrderTerm::sum(std::move(parts));
  }

  OrderTerm parse_prod() {
    OrderTerm t = parse_atom();
    while (true) {
      skip_ws();
      std::size_t save = pos_;
      if (eat('*')) {
        if (eat('2')) {
          t = OrderTerm::times2(std::move(t));
          continue;
        }
        pos_ = save;
        fail("expected \"*2\"");
      }
      break;
    }
    return t;
  }

  OrderTerm parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an atom");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      OrderTerm t = parse_sum();
      skip_ws();
      if (!eat(')')) fail("expected \")\"");
      return t;
    }
    if (c == 'Z') { ++pos_; return OrderTerm::ints(); }
    if (c == 'Q') { ++pos_; return OrderTerm::rats(); }
    if (c == 'R') { ++pos_; return OrderTerm::reals(); }
    if (match_keyword("fin")) {
      skip_ws();
      if (!eat('(')) fail("expected \"(\" after fin");
      skip_ws();
      std::uint64_t n = parse_nat();
      skip_ws();
      if (!eat(')')) fail("expected \")\" after fin count");
      return OrderTerm::finite(n);
    }
    if (match_keyword("omega") || c == 'w') {
      if (c == 'w') ++pos_;
      // "w*" is omega-star unless the star begins a "*2" postfix: an
      // omega-star atom is never followed by a bare digit, so "w*2" can
      // only mean (w)*2 while "w**2" means (w*)*2.
      if (pos_ < text_.size() && text_[pos_] == '*' &&
          !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '2')) {
        ++pos_;
        return OrderTerm::omega_star();
      }
      return OrderTerm::omega();
    }
    fail("expected an atom");
  }

  std::uint64_t parse_nat() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number");
    }
    std::uint64_t value = 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (limit - digit) / 10) {
        fail("fin(n) count overflows 64 bits");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  bool match_keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_into(const OrderTerm& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Finite:
      out += "fin(" + std::to_string(t.finite_size()) + ")";
      return;
    case TermKind::Omega:
      out += "w";
      return;
    case TermKind::OmegaStar:
      out += "w*";
      return;
    case TermKind::Ints:
      out += "Z";
      return;
    case TermKind::Rats:
      out += "Q";
      return;
    case TermKind::Reals:
      out += "R";
      return;
    case TermKind::Sum: {
      bool first = true;
      for (const OrderTerm& part : t.parts()) {
        if (!first) out += "+";
        first = false;
        if (part.kind() == TermKind::Sum) {
          out += "(";
          format_into(part, out);
          out += ")";
        } else {
          format_into(part, out);
        }
      }
      return;
    }
    case TermKind::Times2: {
      const OrderTerm& b = t.base();
      bool parens = b.kind() == TermKind::Sum ||
                    b.kind() == TermKind::OmegaStar;  // "w**2" reads poorly
      if (parens) out += "(";
      format_into(b, out);
      if (parens) out += ")";
      out += "*2";
      return;
    }
  }
}

}  // namespace

OrderTerm parse_term(std::string_view text) {
  return normalize(TermParser(text).parse());
}

std::string format_term(const OrderTerm& t) {
  std::string out;
  format_into(t, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const OrderTerm& t) {
  return os << format_term(t);
}

}  // namespace linord
