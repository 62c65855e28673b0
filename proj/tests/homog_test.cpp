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

#include <string>

#include "linord/elem.hpp"
#include "linord/error.hpp"
#include "linord/homog.hpp"
#include "linord/rng.hpp"
#include "linord/verify.hpp"

using namespace linord;

namespace {

MapPair mp(const std::string& src, const std::string& dst) {
  return MapPair{parse_elem(q_times2(), src), parse_elem(q_times2(), dst)};
}

}  // namespace

TEST_CASE("validate_partial_map: pinned cases") {
  // Valid: bits preserved, order preserved, no J-pairs among sources.
  ValidationResult ok =
      validate_partial_map(PartialMap({mp("0.0", "5.0"), mp("1.1", "7.1")}));
  CHECK(ok.valid);

  // Bit flipped on a bit-0 source: J_l violated.
  ValidationResult flip = validate_partial_map(PartialMap({mp("0.0", "5.1")}));
  CHECK_FALSE(flip.valid);
  CHECK(flip.violation->kind == ViolationKind::JumpLeft);

  ValidationResult flip1 = validate_partial_map(PartialMap({mp("0.1", "5.0")}));
  CHECK_FALSE(flip1.valid);
  CHECK(flip1.violation->kind == ViolationKind::JumpRight);

  // Order reversed.
  ValidationResult rev =
      validate_partial_map(PartialMap({mp("0.0", "5.0"), mp("1.0", "3.0")}));
  CHECK_FALSE(rev.valid);
  CHECK(rev.violation->kind == ViolationKind::Order);
  REQUIRE(rev.violation->second.has_value());

  // J-pair split across different target rationals.
  ValidationResult split =
      validate_partial_map(PartialMap({mp("0.0", "5.0"), mp("0.1", "6.1")}));
  CHECK_FALSE(split.valid);
  CHECK(split.violation->kind == ViolationKind::JumpPair);

  // Conversely, unrelated sources must not land on a J-pair.
  ValidationResult fuse =
      validate_partial_map(PartialMap({mp("0.0", "5.0"), mp("1.1", "5.1")}));
  CHECK_FALSE(fuse.valid);
  CHECK(fuse.violation->kind == ViolationKind::JumpPair);

  CHECK_THROWS_AS(
      validate_partial_map(PartialMap({mp("0.0", "5.0"), mp("0.0", "6.0")})),
      DomainError);
  CHECK_THROWS_AS(
      validate_partial_map(PartialMap({mp("0.0", "5.0"), mp("1.0", "5.0")})),
      DomainError);
}

TEST_CASE("extend: control-point interpolation and slope-1 tails") {
  PartialMap pm({mp("0.0", "5.0"), mp("1.1", "7.1")});
  Automorphism g = Automorphism::extend(pm);

  // base through (0,5), (1,7): base(1/2) = 6 by linear interpolation.
  CHECK(g.base().eval(Rational(1, 2)) == Rational(6));
  CHECK(g.apply(parse_elem(q_times2(), "1/2.0"), Direction::Fwd) ==
        parse_elem(q_times2(), "6.0"));

  // Exact inverse of a control point.
  CHECK(g.apply(parse_elem(q_times2(), "1.1"), Direction::Fwd) ==
        parse_elem(q_times2(), "7.1"));
  CHECK(g.apply(parse_elem(q_times2(), "7.1"), Direction::Inv) ==
        parse_elem(q_times2(), "1.1"));

  // Slope-1 left tail: offset by base(0) - 0 = 5.
  CHECK(g.apply(parse_elem(q_times2(), "-10.0"), Direction::Fwd) ==
        parse_elem(q_times2(), "-5.0"));

  // Right tail: offset by 7 - 1 = 6.
  CHECK(g.base().eval(Rational(10)) == Rational(16));
}

TEST_CASE("extend: empty and fixed-point maps give the identity") {
  Automorphism empty = Automorphism::extend(PartialMap({}));
  CHECK(empty.base().control_points().empty());
  Elem e = parse_elem(q_times2(), "3/7.1");
  CHECK(empty.apply(e, Direction::Fwd) == e);
  CHECK(empty.apply(e, Direction::Inv) == e);

  Automorphism fixed = Automorphism::extend(PartialMap({mp("0.0", "0.0")}));
  for (const char* text : {"0.0", "5.1", "-9/4.0"}) {
    Elem x = parse_elem(q_times2(), text);
    CHECK(fixed.apply(x, Direction::Fwd) == x);
  }
}

TEST_CASE("extend rejects invalid maps with the violation") {
  PartialMap bad({mp("0.0", "5.0"), mp("1.0", "3.0")});
  CHECK_THROWS_AS(Automorphism::extend(bad), DomainError);
  try {
    Automorphism::extend(bad);
  } catch (const DomainError& e) {
    CHECK(e.code() == "invalid_partial_map");
    CHECK(std::string(e.what()).find("order") != std::string::npos);
  }
}

TEST_CASE("quotient map collapses J-classes and commutes with the lift") {
  CHECK(quotient_map(parse_elem(q_times2(), "1/2.0")) == Rational(1, 2));
  CHECK(quotient_map(parse_elem(q_times2(), "1/2.1")) == Rational(1, 2));
  CHECK(quotient_map(parse_elem(q_times2(), "0.0")) <
        quotient_map(parse_elem(q_times2(), "1.0")));

  PartialMap pm({mp("0.0", "5.0"), mp("1.1", "7.1"), mp("2.0", "19/2.0")});
  Automorphism g = Automorphism::extend(pm);
  SplitMix64 rng(61);
  for (int i = 0; i < 100; ++i) {
    auto x = random_element(q_times2(), rng, 40);
    CHECK(quotient_map(g.apply(*x, Direction::Fwd)) ==
          g.base().eval(quotient_map(*x)));
  }
}

TEST_CASE("random valid maps: extension, preservation, inversion") {
  SplitMix64 rng(67);
  for (int m = 0; m < 200; ++m) {
    PartialMap pm = random_partial_map(rng, 6);
    CHECK(validate_partial_map(pm).valid);
    Automorphism g = Automorphism::extend(pm);
    for (const MapPair& pair : pm.pairs()) {
      CHECK(g.apply(pair.src, Direction::Fwd) == pair.dst);
      CHECK(g.apply(pair.dst, Direction::Inv) == pair.src);
    }
    for (int i = 0; i < 50; ++i) {
      auto a = random_element(q_times2(), rng, 30);
      auto b = random_element(q_times2(), rng, 30);
      Elem ga = g.apply(*a, Direction::Fwd);
      Elem gb = g.apply(*b, Direction::Fwd);
      CHECK(compare(q_times2(), *a, *b) == compare(q_times2(), ga, gb));
      CHECK(ga.bit() == a->bit());
      CHECK(g.apply(ga, Direction::Inv) == *a);
      // J-pairing: the partner maps to the image's partner.
      Elem partner = Elem::pair(a->inner(), 1 - a->bit());
      Elem gpartner = g.apply(partner, Direction::Fwd);
      CHECK(gpartner.inner() == ga.inner());
      CHECK(gpartner.bit() == 1 - ga.bit());
    }
  }
}

TEST_CASE("corrupted maps are rejected with the right kind") {
  SplitMix64 rng(71);
  int seen_order = 0, seen_bits = 0, seen_pairs = 0;
  for (int m = 0; m < 100; ++m) {
    CorruptedMap cm = random_corrupted_map(rng);
    ValidationResult r = validate_partial_map(cm.map);
    CHECK_FALSE(r.valid);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->kind == cm.expected);
    if (cm.expected == ViolationKind::Order) ++seen_order;
    if (cm.expected == ViolationKind::JumpLeft ||
        cm.expected == ViolationKind::JumpRight) {
      ++seen_bits;
    }
    if (cm.expected == ViolationKind::JumpPair) ++seen_pairs;
  }
  CHECK(seen_order > 0);
  CHECK(seen_bits > 0);
  CHECK(seen_pairs > 0);
}

TEST_CASE("partial map text round-trip and automorphism JSON") {
  PartialMap pm = PartialMap::parse("0.0 -> 5.0\n1.1 -> 7.1\n");
  CHECK(pm.pairs().size() == 2);
  CHECK(pm.format() == "0.0 -> 5.0\n1.1 -> 7.1\n");
  PartialMap inline_form = PartialMap::parse("0.0 -> 5.0; 1.1 -> 7.1");
  CHECK(inline_form.format() == pm.format());
  CHECK_THROWS_AS(PartialMap::parse("0.0 => 5.0"), ParseError);

  Automorphism g = Automorphism::extend(pm);
  CHECK(g.to_json() ==
        "{\"control_points\":[[\"0\",\"5\"],[\"1\",\"7\"]],"
        "\"tail_slope_left\":\"1\",\"tail_slope_right\":\"1\"}");
}
