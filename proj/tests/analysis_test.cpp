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

#include "linord/analysis.hpp"
#include "linord/enumerate.hpp"
#include "linord/error.hpp"
#include "linord/verify.hpp"
#include "support/oracle.hpp"

using namespace linord;

TEST_CASE("jump_cardinality: atoms, sums, products") {
  // R*2 has continuum many jumps (one per real), hence does not embed.
  CHECK(jump_cardinality(parse_term("R*2")) == CardinalClass::continuum());
  CHECK(jump_cardinality(parse_term("Q")) == CardinalClass::finite(0));
  CHECK(jump_cardinality(parse_term("R")) == CardinalClass::finite(0));
  CHECK(jump_cardinality(parse_term("Z")) == CardinalClass::aleph0());
  CHECK(jump_cardinality(parse_term("Q*2")) == CardinalClass::aleph0());
  CHECK(jump_cardinality(parse_term("w+w*")) == CardinalClass::aleph0());
  // boundary jump: w* has a max, w has a min
  CHECK(jump_cardinality(parse_term("fin(2)+fin(3)")) == CardinalClass::finite(4));
}

TEST_CASE("jump_cardinality(fin(4)) matches brute force") {
  OrderTerm t = parse_term("fin(4)");
  auto carrier = testsupport::finite_carrier_in_order(t);
  CHECK(jump_cardinality(t) ==
        CardinalClass::finite(testsupport::oracle_jump_count(carrier)));
  CHECK(jump_cardinality(t) == CardinalClass::finite(3));
}

TEST_CASE("separability and embeddability") {
  CHECK(is_separable(parse_term("R*2")));
  CHECK_FALSE(is_separable(parse_term("(R*2)*2")));
  CHECK(is_separable(parse_term("fin(3)")));
  CHECK(embeds_into_reals(parse_term("Z")));
  CHECK(embeds_into_reals(parse_term("Q*2")));
  CHECK_FALSE(embeds_into_reals(parse_term("R*2")));
  CHECK(embeds_into_reals(parse_term("R")));
}

TEST_CASE("classify: the split real line and other pinned cases") {
  ClassReport r2 = classify(parse_term("R*2"));
  CHECK(r2.separable);
  CHECK(r2.jump_cardinality == CardinalClass::continuum());
  CHECK_FALSE(r2.embeds_into_reals);
  CHECK_FALSE(r2.left_separable);
  CHECK_FALSE(r2.right_separable);
  CHECK(r2.cardinality == CardinalClass::continuum());

  ClassReport q = classify(parse_term("Q"));
  CHECK(q.separable);
  CHECK(q.jump_cardinality == CardinalClass::finite(0));
  CHECK(q.embeds_into_reals);

  ClassReport qq = classify(parse_term("(Q*2)*2"));
  CHECK(qq.separable);
  CHECK(qq.jump_cardinality == CardinalClass::aleph0());
  CHECK(qq.embeds_into_reals);

  // Report invariant over random terms.
  SplitMix64 rng(5);
  for (int i = 0; i < 300; ++i) {
    OrderTerm t = normalize(testsupport::random_term(rng, 3, true));
    ClassReport r = classify(t);
    bool expected = r.separable && r.jump_cardinality.is_countable();
    CHECK(r.embeds_into_reals == expected);
    CHECK(r.left_separable == expected);
    CHECK(r.right_separable == expected);
  }
}

TEST_CASE("ClassReport JSON is the frozen flat schema") {
  CHECK(to_json(classify(parse_term("R*2"))) ==
        "{\"cardinality\":\"continuum\",\"jump_cardinality\":\"continuum\","
        "\"separable\":true,\"left_separable\":false,\"right_separable\":false,"
        "\"embeds_into_reals\":false,\"has_min\":false,\"has_max\":false}");
  CHECK(to_json(classify(parse_term("fin(3)"))) ==
        "{\"cardinality\":\"fin:3\",\"jump_cardinality\":\"fin:2\","
        "\"separable\":true,\"left_separable\":true,\"right_separable\":true,"
        "\"embeds_into_reals\":true,\"has_min\":true,\"has_max\":true}");
}

TEST_CASE("jump_relations") {
  OrderTerm q2 = parse_term("Q*2");
  JumpRelations jr = jump_relations(q2, parse_elem(q2, "1/2.0"));
  CHECK(jr.in_left);
  CHECK_FALSE(jr.in_right);

  OrderTerm z = parse_term("Z");
  JumpRelations rel =
      jump_relations(z, parse_elem(z, "0"), parse_elem(z, "1"));
  REQUIRE(rel.related.has_value());
  CHECK(*rel.related);

  OrderTerm q = parse_term("Q");
  JumpRelations unrel =
      jump_relations(q, parse_elem(q, "0"), parse_elem(q, "1"));
  REQUIRE(unrel.related.has_value());
  CHECK_FALSE(*unrel.related);

  CHECK_THROWS_AS(jump_relations(parse_term("R"), Elem::rational(Rational(0))),
                  SymbolicTermError);
}

TEST_CASE("jumps stream") {
  // Q has no jumps: the stream is empty at once (no blind scanning).
  JumpStream none(parse_term("Q"));
  CHECK_FALSE(none.next().has_value());

  OrderTerm w = parse_term("w");
  JumpStream ws(w);
  Jump j0 = *ws.next();
  Jump j1 = *ws.next();
  CHECK(format_elem(j0.left) == "0");
  CHECK(format_elem(j0.right) == "1");
  CHECK(format_elem(j1.left) == "1");
  CHECK(format_elem(j1.right) == "2");

  // fin(3)+fin(2): brute force says 4 jumps (5 points in a row), including
  // the boundary jump (0:2, 1:0).
  OrderTerm t = parse_term("fin(3)+fin(2)");
  auto carrier = testsupport::finite_carrier_in_order(t);
  std::uint64_t expected = testsupport::oracle_jump_count(carrier);
  CHECK(expected == 4);
  CHECK(jump_cardinality(t) == CardinalClass::finite(expected));
  JumpStream ts(t);
  std::set<std::string> seen;
  bool boundary = false;
  while (auto j = ts.next()) {
    CHECK(compare(t, j->left, j->right) == Ordering::LT);
    CHECK(*neighbor(t, j->left, Side::Succ) == j->right);
    CHECK(seen.insert(format_elem(j->left) + "|" + format_elem(j->right)).second);
    if (format_elem(j->left) == "0:2" && format_elem(j->right) == "1:0") {
      boundary = true;
    }
  }
  CHECK(seen.size() == expected);
  CHECK(boundary);

  CHECK_THROWS_AS(JumpStream(parse_term("R*2")), SymbolicTermError);
  CHECK_THROWS_AS(JumpStream(parse_term("Z+R")), SymbolicTermError);
}

TEST_CASE("jumps are distinct and well-formed on catalog terms") {
  for (const OrderTerm& t : testsupport::catalog_terms()) {
    CAPTURE(format_term(t));
    if (!jump_cardinality(t).is_countable()) continue;
    JumpStream s(t);
    std::set<std::string> seen;
    for (int i = 0; i < 500; ++i) {
      auto j = s.next();
      if (!j) break;
      CHECK(compare(t, j->left, j->right) == Ordering::LT);
      CHECK(*neighbor(t, j->left, Side::Succ) == j->right);
      CHECK(seen.insert(format_elem(j->left)).second);
    }
  }
}

TEST_CASE("canonical_dense(R*2) is exactly the rational pairs") {
  OrderTerm r2 = parse_term("R*2");
  DenseSet d = canonical_dense(r2);
  CHECK_FALSE(d.enumerable());
  SplitMix64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto e = random_element(r2, rng, 60);
    REQUIRE(e.has_value());
    CHECK(d.contains(*e));  // every representable point is a rational pair
  }
  // Structurally foreign elements are rejected, not accepted.
  CHECK_FALSE(d.contains(Elem::integer(3)));
  CHECK_FALSE(d.contains(Elem::pair(Elem::integer(3), 0)));
  CHECK_FALSE(d.contains(Elem::rational(Rational(1, 2))));
}

TEST_CASE("canonical_dense(Q*2) is the full carrier") {
  OrderTerm q2 = parse_term("Q*2");
  DenseSet d = canonical_dense(q2);
  SplitMix64 rng(19);
  for (int i = 0; i < 200; ++i) {
    auto e = random_element(q2, rng, 50);
    CHECK(d.contains(*e));
  }
}

TEST_CASE("canonical_dense membership matches its enumeration") {
  for (const OrderTerm& t : testsupport::catalog_terms()) {
    CAPTURE(format_term(t));
    DenseSet d = canonical_dense(t);
    DenseStream s = enumerate_dense(d);
    for (int i = 0; i < 200; ++i) {
      auto e = s.next();
      if (!e) break;
      CHECK(d.contains(*e));
    }
  }
}

TEST_CASE("canonical_dense(fin(3)) needs the interior point") {
  OrderTerm t = parse_term("fin(3)");
  auto carrier = testsupport::finite_carrier_in_order(t);
  DenseSet d = canonical_dense(t);
  // Oracle: the full set {0,1,2} passes the exhaustive density check, and
  // the interior point is irreplaceable: {0,2} fails on the interval (0,2).
  CHECK(testsupport::oracle_dense_exhaustive(
      carrier, [&](const Elem& e) { return d.contains(e); }));
  CHECK_FALSE(testsupport::oracle_dense_exhaustive(
      carrier, [&](const Elem& e) { return format_elem(e) != "1"; }));
  for (const Elem& e : carrier) CHECK(d.contains(e));
}

TEST_CASE("canonical_dense rejects non-separable terms") {
  CHECK_THROWS_AS(canonical_dense(parse_term("(R*2)*2")), DomainError);
  try {
    canonical_dense(parse_term("(R*2)*2"));
  } catch (const DomainError& e) {
    CHECK(e.code() == "not_separable");
  }
}

TEST_CASE("sided_dense") {
  // Every integer is a right jump partner, so the left set is all of Z.
  OrderTerm z = parse_term("Z");
  DenseSet left = sided_dense(z, DenseSide::Left);
  SplitMix64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto e = random_element(z, rng, 80);
    CHECK(left.contains(*e));
  }

  // Q: no jumps to add; still the full carrier here.
  OrderTerm q = parse_term("Q");
  DenseSet qleft = sided_dense(q, DenseSide::Left);
  for (int i = 0; i < 100; ++i) {
    auto e = random_element(q, rng, 40);
    CHECK(qleft.contains(*e));
  }

  // R*2 has uncountably many jump partners.
  CHECK_THROWS_AS(sided_dense(parse_term("R*2"), DenseSide::Left), DomainError);
  try {
    sided_dense(parse_term("R*2"), DenseSide::Left);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not_embeddable");
  }
}

TEST_CASE("check_dense_sampled: pinned cases") {
  // fin(3) with D = {0, 2}: exhaustive check finds the hole at (0, 2).
  OrderTerm f3 = parse_term("fin(3)");
  DenseSet holey = without_elements(canonical_dense(f3), {parse_elem(f3, "1")});
  DenseCheckParams all;
  all.pairs = 100;
  all.budget = 100;
  all.mode = DenseMode::Dense;
  DenseCheckResult r = check_dense_sampled(f3, holey, all);
  CHECK_FALSE(r.pass);
  CHECK(r.exhaustive);
  REQUIRE(r.counterexample.has_value());
  CHECK(format_elem(r.counterexample->first) == "0");
  CHECK(format_elem(r.counterexample->second) == "2");

  // w+fin(2) with D omitting 1:0: no interval pins the missing point.
  OrderTerm wf = parse_term("w+fin(2)");
  DenseSet omit = without_elements(canonical_dense(wf), {parse_elem(wf, "1:0")});
  DenseCheckParams p;
  p.pairs = 100;
  p.budget = 500;
  p.mode = DenseMode::Dense;
  CHECK(check_dense_sampled(wf, omit, p).pass);

  // Q with D = Q in left mode.
  OrderTerm q = parse_term("Q");
  DenseCheckParams lp;
  lp.pairs = 100;
  lp.budget = 500;
  lp.mode = DenseMode::Left;
  CHECK(check_dense_sampled(q, canonical_dense(q), lp).pass);

  CHECK_THROWS_AS(
      check_dense_sampled(parse_term("R"), canonical_dense(parse_term("R")),
                          DenseCheckParams{}),
      SymbolicTermError);
}

TEST_CASE("sided sets pass their sided checks on the catalog") {
  VerifyParams p;
  p.pairs = 200;
  p.budget = 2000;
  for (const OrderTerm& t : testsupport::catalog_terms()) {
    CAPTURE(format_term(t));
    SuiteResult r = verify_dense(t, p);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("finite-oracle equivalence over the depth-3 universe") {
  auto universe = testsupport::finite_term_universe();
  CHECK(universe.size() >= 300);
  for (const OrderTerm& t : universe) {
    CAPTURE(format_term(t));
    auto carrier = testsupport::finite_carrier_in_order(t);
    CHECK(cardinality(t) == CardinalClass::finite(carrier.size()));
    CHECK(jump_cardinality(t) ==
          CardinalClass::finite(testsupport::oracle_jump_count(carrier)));
    CHECK(is_separable(t));
    CHECK(embeds_into_reals(t));
    DenseSet d = canonical_dense(t);
    CHECK(testsupport::oracle_dense_exhaustive(
        carrier, [&](const Elem& e) { return d.contains(e); }));
  }
}
