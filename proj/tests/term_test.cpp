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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "linord/elem.hpp"
#include "linord/enumerate.hpp"
#include "linord/error.hpp"
#include "linord/rng.hpp"
#include "linord/term.hpp"
#include "linord/verify.hpp"
#include "support/oracle.hpp"

using namespace linord;

TEST_CASE("parse_term reads the grammar") {
  CHECK(parse_term("Q*2") == OrderTerm::times2(OrderTerm::rats()));
  // postfix *2 binds tighter than +
  CHECK(parse_term("fin(3)+Z*2") ==
        OrderTerm::sum({OrderTerm::finite(3), OrderTerm::times2(OrderTerm::ints())}));
  // normalization drops the empty part
  CHECK(parse_term("fin(0)+Q") == OrderTerm::rats());
  CHECK(parse_term("omega") == OrderTerm::omega());
  CHECK(parse_term("omega*") == OrderTerm::omega_star());
  CHECK(parse_term("w*") == OrderTerm::omega_star());
  // "w*2" can only mean (w)*2; omega-star followed by a bare digit is
  // never grammatical.
  CHECK(parse_term("w*2") == OrderTerm::times2(OrderTerm::omega()));
  CHECK(parse_term("w**2") == OrderTerm::times2(OrderTerm::omega_star()));
  CHECK(parse_term("(w*)*2") == OrderTerm::times2(OrderTerm::omega_star()));
  CHECK(parse_term(" fin( 12 ) + ( Q ) ") ==
        OrderTerm::sum({OrderTerm::finite(12), OrderTerm::rats()}));
  CHECK(parse_term("Q*2*2") ==
        OrderTerm::times2(OrderTerm::times2(OrderTerm::rats())));
}

TEST_CASE("parse_term reports syntax errors with positions") {
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("fin(3"), ParseError);
  CHECK_THROWS_AS(parse_term("Q+"), ParseError);
  CHECK_THROWS_AS(parse_term("Q*3"), ParseError);
  CHECK_THROWS_AS(parse_term("R*"), ParseError);
  CHECK_THROWS_AS(parse_term("Q Q"), ParseError);
  CHECK_THROWS_AS(parse_term("fin(99999999999999999999)"), ParseError);
  try {
    parse_term("fin(3");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(e.code() == "parse_error");
  }
}

TEST_CASE("normalization collapses empty parts and is idempotent") {
  CHECK(normalize(OrderTerm::sum({OrderTerm::finite(0), OrderTerm::finite(0)})) ==
        OrderTerm::finite(0));
  CHECK(normalize(OrderTerm::times2(OrderTerm::finite(0))) == OrderTerm::finite(0));
  CHECK(normalize(OrderTerm::sum({OrderTerm::finite(0), OrderTerm::rats(),
                                  OrderTerm::times2(OrderTerm::finite(0))})) ==
        OrderTerm::rats());

  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    OrderTerm t = testsupport::random_term(rng, 4, true);
    OrderTerm n = normalize(t);
    CHECK(normalize(n) == n);
  }
}

TEST_CASE("term round-trip: parse(format(t)) == normalize(t)") {
  SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    OrderTerm t = testsupport::random_term(rng, 4, true);
    CHECK(parse_term(format_term(t)) == normalize(t));
    // formatting a normalized term round-trips identically
    OrderTerm n = normalize(t);
    CHECK(parse_term(format_term(n)) == n);
  }
}

TEST_CASE("compare: pinned cases") {
  OrderTerm q2 = parse_term("Q*2");
  Elem a = parse_elem(q2, "1/2.0");
  Elem b = parse_elem(q2, "1/2.1");
  CHECK(compare(q2, a, b) == Ordering::LT);

  OrderTerm fq = parse_term("fin(3)+Q");
  CHECK(compare(fq, parse_elem(fq, "0:2"), parse_elem(fq, "1:-7")) ==
        Ordering::LT);

  OrderTerm z = parse_term("Z");
  CHECK(compare(z, parse_elem(z, "4"), parse_elem(z, "4")) == Ordering::EQ);
}

TEST_CASE("compare rejects symbolic terms and invalid elements") {
  OrderTerm r2 = parse_term("R*2");
  Elem e = parse_elem(r2, "1/2.0");  // representable point, fine to parse
  CHECK_THROWS_AS(compare(r2, e, e), SymbolicTermError);

  OrderTerm f3 = parse_term("fin(3)");
  CHECK_THROWS_AS(compare(f3, Elem::nat(3), Elem::nat(0)), InvalidElementError);
  CHECK_THROWS_AS(parse_elem(f3, "7"), InvalidElementError);
  CHECK_FALSE(is_valid(f3, Elem::integer(1)));
}

TEST_CASE("enumerate: pinned schemes") {
  OrderTerm f2 = parse_term("fin(2)");
  ElemStream s(f2);
  CHECK(format_elem(*s.next()) == "0");
  CHECK(format_elem(*s.next()) == "1");
  CHECK_FALSE(s.next().has_value());
  CHECK_FALSE(s.next().has_value());

  OrderTerm z = parse_term("Z");
  ElemStream zs(z);
  std::vector<std::string> five;
  for (int i = 0; i < 5; ++i) five.push_back(format_elem(*zs.next()));
  CHECK(five == std::vector<std::string>{"0", "1", "-1", "2", "-2"});

  // Q*2 interleaves bits over the rational enumeration.
  OrderTerm q = parse_term("Q");
  OrderTerm q2 = parse_term("Q*2");
  Elem q0 = *nth_elem(q, 0);
  Elem q1 = *nth_elem(q, 1);
  ElemStream qs(q2);
  CHECK(*qs.next() == Elem::pair(q0, 0));
  CHECK(*qs.next() == Elem::pair(q0, 1));
  CHECK(*qs.next() == Elem::pair(q1, 0));
  CHECK(*qs.next() == Elem::pair(q1, 1));

  CHECK_THROWS_AS(nth_elem(parse_term("R"), 0), SymbolicTermError);
}

TEST_CASE("enumerate: no repeats and index round-trip on the catalog") {
  for (const OrderTerm& t : testsupport::catalog_terms()) {
    CAPTURE(format_term(t));
    std::set<std::string> seen;
    ElemStream s(t);
    for (std::uint64_t k = 0; k < 500; ++k) {
      auto e = s.next();
      if (!e) break;
      CHECK(is_valid(t, *e));
      CHECK(seen.insert(format_elem(*e)).second);
      CHECK(index_of(t, *e) == k);
    }
  }
}

TEST_CASE("enumerate reaches structurally sampled elements within their index") {
  SplitMix64 rng(23);
  for (const OrderTerm& t : testsupport::catalog_terms()) {
    CAPTURE(format_term(t));
    for (int i = 0; i < 40; ++i) {
      auto e = random_element(t, rng, 15);
      REQUIRE(e.has_value());
      std::uint64_t idx = index_of(t, *e);
      auto back = nth_elem(t, idx);
      REQUIRE(back.has_value());
      CHECK(*back == *e);
    }
  }
}

TEST_CASE("bounds: structural recursion") {
  OrderTerm wf = parse_term("w+fin(2)");
  TermBounds b = bounds(wf);
  CHECK(b.has_min);
  CHECK(b.has_max);
  CHECK(format_elem(*b.min) == "0:0");
  CHECK(format_elem(*b.max) == "1:1");

  TermBounds q2 = bounds(parse_term("Q*2"));
  CHECK_FALSE(q2.has_min);
  CHECK_FALSE(q2.has_max);

  TermBounds empty = bounds(parse_term("fin(0)"));
  CHECK_FALSE(empty.has_min);
  CHECK_FALSE(empty.has_max);

  // Symbolic terms still report flags (and any existing endpoint lives in
  // a countable subterm).
  TermBounds r = bounds(parse_term("fin(1)+R"));
  CHECK(r.has_min);
  CHECK_FALSE(r.has_max);
}

TEST_CASE("bounds(w*+w): no endpoint survives a 200-element scan") {
  // Oracle first: no enumerated element stays minimal (maximal) at every
  // stage — each candidate from the first half of the prefix is beaten by
  // some element appearing at a later stage.
  OrderTerm t = parse_term("w*+w");
  std::vector<Elem> prefix;
  ElemStream s(t);
  for (int i = 0; i < 200; ++i) prefix.push_back(*s.next());
  for (std::size_t k = 0; k < 100; ++k) {
    bool smaller = false;
    bool larger = false;
    for (const Elem& other : prefix) {
      if (compare(t, other, prefix[k]) == Ordering::LT) smaller = true;
      if (compare(t, other, prefix[k]) == Ordering::GT) larger = true;
    }
    CHECK(smaller);
    CHECK(larger);
  }

  TermBounds b = bounds(t);
  CHECK_FALSE(b.has_min);
  CHECK_FALSE(b.has_max);
}

TEST_CASE("neighbor: lexicographic and boundary rules") {
  OrderTerm z2 = parse_term("Z*2");
  CHECK(format_elem(*neighbor(z2, parse_elem(z2, "3.1"), Side::Succ)) == "4.0");
  CHECK(format_elem(*neighbor(z2, parse_elem(z2, "4.0"), Side::Pred)) == "3.1");

  OrderTerm q = parse_term("Q");
  CHECK_FALSE(neighbor(q, parse_elem(q, "1/2"), Side::Succ).has_value());

  OrderTerm ff = parse_term("fin(2)+fin(2)");
  CHECK(format_elem(*neighbor(ff, parse_elem(ff, "0:1"), Side::Succ)) == "1:0");
  CHECK(format_elem(*neighbor(ff, parse_elem(ff, "1:0"), Side::Pred)) == "0:1");

  OrderTerm fq = parse_term("fin(1)+Q");
  CHECK_FALSE(neighbor(fq, parse_elem(fq, "0:0"), Side::Succ).has_value());
}

TEST_CASE("neighbor(w+fin(2), 1:0, pred) is none — oracle on a prefix") {
  OrderTerm t = parse_term("w+fin(2)");
  Elem x = parse_elem(t, "1:0");
  // Oracle: every candidate p < x from the first half of the prefix admits
  // a z with p < z < x at some later stage, so none is the predecessor.
  std::vector<Elem> prefix;
  ElemStream s(t);
  for (int i = 0; i < 400; ++i) prefix.push_back(*s.next());
  for (std::size_t k = 0; k < 200; ++k) {
    const Elem& p = prefix[k];
    if (compare(t, p, x) != Ordering::LT) continue;
    bool between = false;
    for (const Elem& z : prefix) {
      if (compare(t, p, z) == Ordering::LT && compare(t, z, x) == Ordering::LT) {
        between = true;
        break;
      }
    }
    CHECK(between);
  }
  CHECK_FALSE(neighbor(t, x, Side::Pred).has_value());
}

TEST_CASE("cardinality") {
  CHECK(cardinality(parse_term("fin(3)+fin(2)")) == CardinalClass::finite(5));
  CHECK(cardinality(parse_term("R*2")) == CardinalClass::continuum());
  CHECK(cardinality(parse_term("Q*2")) == CardinalClass::aleph0());
  CHECK(cardinality(parse_term("fin(0)")) == CardinalClass::finite(0));
}

TEST_CASE("CardinalClass algebra") {
  auto fin = [](std::uint64_t n) { return CardinalClass::finite(n); };
  CHECK(fin(2) + fin(3) == fin(5));
  CHECK(fin(2) + CardinalClass::aleph0() == CardinalClass::aleph0());
  CHECK(CardinalClass::aleph0() + CardinalClass::continuum() ==
        CardinalClass::continuum());
  CHECK(CardinalClass::max(fin(7), CardinalClass::aleph0()) ==
        CardinalClass::aleph0());
  CHECK(fin(3).leq(fin(3)));
  CHECK(fin(3).leq(CardinalClass::aleph0()));
  CHECK_FALSE(CardinalClass::continuum().leq(CardinalClass::aleph0()));
  CHECK(fin(4).doubled() == fin(8));
  CHECK(CardinalClass::continuum().doubled() == CardinalClass::continuum());

  // commutativity / associativity over the three kinds
  std::vector<CardinalClass> samples = {fin(0), fin(3), CardinalClass::aleph0(),
                                        CardinalClass::continuum()};
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      CHECK(a + b == b + a);
      CHECK(CardinalClass::max(a, b) == CardinalClass::max(b, a));
      for (const auto& c : samples) {
        CHECK((a + b) + c == a + (b + c));
      }
    }
  }
}

TEST_CASE("element text round-trips bit-exactly") {
  SplitMix64 rng(31);
  int checked = 0;
  for (const OrderTerm& t : testsupport::catalog_terms()) {
    for (int i = 0; i < 50; ++i) {
      auto e = random_element(t, rng, 30);
      REQUIRE(e.has_value());
      CHECK(parse_elem(t, format_elem(*e)) == *e);
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("compare properties via the order suite") {
  VerifyParams p;
  p.samples = 1000;
  p.budget = 600;
  for (const OrderTerm& t : testsupport::catalog_terms()) {
    CAPTURE(format_term(t));
    SuiteResult r = verify_order(t, p);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }
}
