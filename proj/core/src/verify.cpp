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

#include "linord/verify.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "linord/analysis.hpp"
#include "linord/embed.hpp"
#include "linord/enumerate.hpp"
#include "linord/error.hpp"
#include "linord/homog.hpp"

namespace linord {

void SuiteResult::add(CheckOutcome outcome) {
  pass = pass && outcome.pass;
  checks.push_back(std::move(outcome));
}

namespace {

std::string pair_text(const Elem& a, const Elem& b) {
  return "(" + format_elem(a) + ", " + format_elem(b) + ")";
}

// Prefix of the enumeration used as the sampling pool.
std::vector<Elem> sample_pool(const OrderTerm& t, std::uint64_t budget) {
  std::vector<Elem> pool;
  ElemStream stream(t);
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto e = stream.next();
    if (!e) break;
    pool.push_back(std::move(*e));
  }
  return pool;
}

}  // namespace

std::optional<Elem> random_element(const OrderTerm& t, SplitMix64& rng,
                                   std::uint64_t magnitude) {
  switch (t.kind()) {
    case TermKind::Finite: {
      std::uint64_t n = t.finite_size();
      if (n == 0) return std::nullopt;
      return Elem::nat(Integer(static_cast<unsigned long>(rng.below(n))));
    }
    case TermKind::Omega:
      return Elem::nat(Integer(static_cast<unsigned long>(rng.below(magnitude))));
    case TermKind::OmegaStar:
      return Elem::neg_int(-1 - Integer(static_cast<unsigned long>(rng.below(magnitude))));
    case TermKind::Ints: {
      Integer k(static_cast<unsigned long>(rng.below(magnitude)));
      if (rng.below(2) == 1) k = -k;
      return Elem::integer(k);
    }
    case TermKind::Rats:
    case TermKind::Reals: {
      Integer num(static_cast<unsigned long>(rng.below(magnitude)));
      if (rng.below(2) == 1) num = -num;
      Integer den(static_cast<unsigned long>(1 + rng.below(magnitude)));
      return Elem::rational(make_rational(num, den));
    }
    case TermKind::Sum: {
      const auto& parts = t.parts();
      // Try a random part first, then scan for a nonempty one.
      std::size_t start = rng.below(parts.size());
      for (std::size_t d = 0; d < parts.size(); ++d) {
        std::size_t i = (start + d) % parts.size();
        if (auto inner = random_element(parts[i], rng, magnitude)) {
          return Elem::in_sum(i, std::move(*inner));
        }
      }
      return std::nullopt;
    }
    case TermKind::Times2: {
      auto inner = random_element(t.base(), rng, magnitude);
      if (!inner) return std::nullopt;
      return Elem::pair(std::move(*inner), static_cast<int>(rng.below(2)));
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// order suite

SuiteResult verify_order(const OrderTerm& t, const VerifyParams& p) {
  SuiteResult result{"order", {}, true};
  if (contains_reals(t)) {
    result.add({"symbolic", true, "element-level checks skipped: term contains R"});
    return result;
  }
  SplitMix64 rng(p.seed);
  std::vector<Elem> pool = sample_pool(t, p.budget);
  if (pool.size() < 1) {
    result.add({"empty_carrier", true, "no elements to check"});
    return result;
  }
  auto pick = [&]() -> const Elem& { return pool[rng.below(pool.size())]; };

  {
    CheckOutcome out{"compare.total_antisymmetric", true, ""};
    for (std::uint64_t i = 0; i < p.samples && out.pass; ++i) {
      const Elem& x = pick();
      const Elem& y = pick();
      Ordering xy = compare(t, x, y);
      Ordering yx = compare(t, y, x);
      bool ok = (xy == Ordering::EQ && yx == Ordering::EQ && x == y) ||
                (xy == Ordering::LT && yx == Ordering::GT) ||
                (xy == Ordering::GT && yx == Ordering::LT);
      if (xy == Ordering::EQ && !(x == y)) ok = false;
      if (x == y && xy != Ordering::EQ) ok = false;
      if (!ok) {
        out.pass = false;
        out.detail = "antisymmetry broken on " + pair_text(x, y);
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"compare.transitive", true, ""};
    for (std::uint64_t i = 0; i < p.samples && out.pass; ++i) {
      const Elem& x = pick();
      const Elem& y = pick();
      const Elem& z = pick();
      bool xy = compare(t, x, y) != Ordering::GT;
      bool yz = compare(t, y, z) != Ordering::GT;
      bool xz = compare(t, x, z) != Ordering::GT;
      if (xy && yz && !xz) {
        out.pass = false;
        out.detail = "transitivity broken on (" + format_elem(x) + ", " +
                     format_elem(y) + ", " + format_elem(z) + ")";
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"neighbor.inverse", true, ""};
    for (const Elem& x : pool) {
      if (auto s = neighbor(t, x, Side::Succ)) {
        auto back = neighbor(t, *s, Side::Pred);
        if (!back || !(*back == x)) {
          out.pass = false;
          out.detail = "succ/pred not inverse at " + format_elem(x);
          break;
        }
      }
      if (auto pr = neighbor(t, x, Side::Pred)) {
        auto back = neighbor(t, *pr, Side::Succ);
        if (!back || !(*back == x)) {
          out.pass = false;
          out.detail = "pred/succ not inverse at " + format_elem(x);
          break;
        }
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"bounds.extremes", true, ""};
    TermBounds tb = bounds(t);
    if (tb.has_min) {
      if (neighbor(t, *tb.min, Side::Pred)) {
        out.pass = false;
        out.detail = "minimum has a predecessor";
      }
      for (const Elem& x : pool) {
        if (compare(t, *tb.min, x) == Ordering::GT) {
          out.pass = false;
          out.detail = "minimum above " + format_elem(x);
          break;
        }
      }
    }
    if (tb.has_max && out.pass) {
      if (neighbor(t, *tb.max, Side::Succ)) {
        out.pass = false;
        out.detail = "maximum has a successor";
      }
      for (const Elem& x : pool) {
        if (compare(t, *tb.max, x) == Ordering::LT) {
          out.pass = false;
          out.detail = "maximum below " + format_elem(x);
          break;
        }
      }
    }
    result.add(std::move(out));
  }

  return result;
}

// ---------------------------------------------------------------------------
// enumeration suite

SuiteResult verify_enumeration(const OrderTerm& t, const VerifyParams& p) {
  SuiteResult result{"enumeration", {}, true};
  if (contains_reals(t)) {
    result.add({"symbolic", true, "enumeration skipped: term contains R"});
    return result;
  }
  SplitMix64 rng(p.seed);
  std::vector<Elem> pool = sample_pool(t, p.budget);

  {
    CheckOutcome out{"enumerate.distinct_valid", true, ""};
    std::set<std::string> seen;
    for (const Elem& e : pool) {
      if (!is_valid(t, e)) {
        out.pass = false;
        out.detail = "enumerated invalid element " + format_elem(e);
        break;
      }
      if (!seen.insert(format_elem(e)).second) {
        out.pass = false;
        out.detail = "repeated element " + format_elem(e);
        break;
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"enumerate.index_roundtrip", true, ""};
    for (std::uint64_t k = 0; k < pool.size(); ++k) {
      if (index_of(t, pool[k]) != k) {
        out.pass = false;
        out.detail = "index_of disagrees at position " + std::to_string(k);
        break;
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"enumerate.reaches_random_elements", true, ""};
    for (std::uint64_t i = 0; i < 50; ++i) {
      auto e = random_element(t, rng, 20);
      if (!e) break;
      std::uint64_t idx = index_of(t, *e);
      auto back = nth_elem(t, idx);
      if (!back || !(*back == *e)) {
        out.pass = false;
        out.detail = "nth_elem(index_of(e)) != e for e = " + format_elem(*e);
        break;
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"elem.text_roundtrip", true, ""};
    for (const Elem& e : pool) {
      Elem back = parse_elem(t, format_elem(e));
      if (!(back == e)) {
        out.pass = false;
        out.detail = "element text round-trip broke on " + format_elem(e);
        break;
      }
    }
    result.add(std::move(out));
  }

  return result;
}

// ---------------------------------------------------------------------------
// dense suite

SuiteResult verify_dense(const OrderTerm& t, const VerifyParams& p) {
  SuiteResult result{"dense", {}, true};
  if (contains_reals(t)) {
    result.add({"symbolic", true, "density sampling skipped: term contains R"});
    return result;
  }
  DenseCheckParams base;
  base.pairs = p.pairs;
  base.budget = p.budget;
  base.seed = p.seed;

  {
    CheckOutcome out{"canonical.dense", true, ""};
    DenseSet d = canonical_dense(t);
    DenseCheckParams params = base;
    params.mode = DenseMode::Dense;
    auto r = check_dense_sampled(t, d, params);
    out.pass = r.pass;
    if (!r.pass && r.counterexample) {
      out.detail = "interval " + pair_text(r.counterexample->first,
                                           r.counterexample->second) +
                   " misses the canonical dense set";
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"sided.left", true, ""};
    DenseSet d = sided_dense(t, DenseSide::Left);
    DenseCheckParams params = base;
    params.mode = DenseMode::Left;
    auto r = check_dense_sampled(t, d, params);
    out.pass = r.pass;
    if (!r.pass && r.counterexample) {
      out.detail = "sup reachability fails on " +
                   pair_text(r.counterexample->first, r.counterexample->second);
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"sided.right", true, ""};
    DenseSet d = sided_dense(t, DenseSide::Right);
    DenseCheckParams params = base;
    params.mode = DenseMode::Right;
    auto r = check_dense_sampled(t, d, params);
    out.pass = r.pass;
    if (!r.pass && r.counterexample) {
      out.detail = "inf reachability fails on " +
                   pair_text(r.counterexample->first, r.counterexample->second);
    }
    result.add(std::move(out));
  }

  return result;
}

// ---------------------------------------------------------------------------
// embed suite

SuiteResult verify_embed(const OrderTerm& t, const VerifyParams& p) {
  SuiteResult result{"embed", {}, true};
  if (contains_reals(t)) {
    result.add({"symbolic", true, "embeddings skipped: term contains R"});
    return result;
  }
  SplitMix64 rng(p.seed);
  std::vector<Elem> pool = sample_pool(t, p.budget);
  if (pool.empty()) {
    result.add({"empty_carrier", true, "no elements to embed"});
    return result;
  }
  auto pick = [&]() -> const Elem& { return pool[rng.below(pool.size())]; };

  {
    CheckOutcome out{"backforth.order_preserving", true, ""};
    RationalEmbedding emb = RationalEmbedding::back_and_forth(t);
    std::vector<std::pair<Elem, Rational>> placed;
    std::uint64_t n = std::min<std::uint64_t>(p.prefix, pool.size());
    for (std::uint64_t i = 0; i < n; ++i) {
      placed.push_back({pool[i], emb.place(pool[i])});
    }
    for (std::size_t i = 0; i < placed.size() && out.pass; ++i) {
      for (std::size_t j = i + 1; j < placed.size(); ++j) {
        Ordering expect = compare(t, placed[i].first, placed[j].first);
        Ordering got = placed[i].second < placed[j].second ? Ordering::LT
                       : placed[i].second == placed[j].second
                           ? Ordering::EQ
                           : Ordering::GT;
        if (expect != got) {
          out.pass = false;
          out.detail = "images disagree with the order on " +
                       pair_text(placed[i].first, placed[j].first);
          break;
        }
      }
    }
    result.add(std::move(out));
  }

  UniversalEmbedding universal(t);

  {
    CheckOutcome out{"universal.certified_order", true, ""};
    for (std::uint64_t i = 0; i < p.samples && out.pass; ++i) {
      const Elem& x = pick();
      const Elem& y = pick();
      CertifiedOrder c = certified_compare(universal, x, y);
      Ordering expect = compare(t, x, y);
      if (c.order != expect) {
        out.pass = false;
        out.detail = "certified order wrong on " + pair_text(x, y);
      }
      if (expect == Ordering::EQ &&
          c.route != CertifiedOrder::Route::Identical) {
        out.pass = false;
        out.detail = "identical pair routed as distinct: " + pair_text(x, y);
      }
      if (expect != Ordering::EQ &&
          c.route == CertifiedOrder::Route::Identical) {
        out.pass = false;
        out.detail = "distinct pair reported identical: " + pair_text(x, y);
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"universal.certified_gap", true, ""};
    for (std::uint64_t i = 0; i < 50 && out.pass; ++i) {
      const Elem& x = pick();
      const Elem& y = pick();
      if (compare(t, x, y) != Ordering::LT) continue;
      CertifiedOrder c = certified_compare(universal, x, y);
      if (c.route == CertifiedOrder::Route::Stage) {
        std::uint64_t stage = c.separation->stage;
        Rational vx = universal.real_part(x).lower(stage);
        Rational vy = universal.real_part(y).lower(stage);
        if (!(vy - vx >= c.separation->gap)) {
          out.pass = false;
          out.detail = "gap not realized at stage " + std::to_string(stage) +
                       " on " + pair_text(x, y);
        }
      } else {
        // Jump route: reals agree exactly and the bits decide.
        std::uint64_t stage = 64;
        Rational vx = universal.real_part(x).lower(stage);
        Rational vy = universal.real_part(y).lower(stage);
        if (vx != vy || universal.bit_of(x) != 0 || universal.bit_of(y) != 1) {
          out.pass = false;
          out.detail = "jump route wrong on " + pair_text(x, y);
        }
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"staged.monotone", true, ""};
    const Elem& x = pick();
    StagedReal r = universal.real_part(x);
    Rational prev = r.lower(0);
    for (std::uint64_t stage = 1; stage < 32 && out.pass; ++stage) {
      Rational cur = r.lower(stage);
      if (cur < prev || cur > prev + StagedReal::error_bound(stage - 1)) {
        out.pass = false;
        out.detail = "approximant not monotone within bound at stage " +
                     std::to_string(stage);
      }
      prev = cur;
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"reals.injective_ordered", true, ""};
    RealEmbedding reals(t);
    for (std::uint64_t i = 0; i < p.samples && out.pass; ++i) {
      const Elem& x = pick();
      const Elem& y = pick();
      Ordering expect = compare(t, x, y);
      CertifiedOrder c = certified_compare(reals, x, y);
      if (c.order != expect) {
        out.pass = false;
        out.detail = "real embedding order wrong on " + pair_text(x, y);
      }
      if (expect != Ordering::EQ) {
        if (c.route != CertifiedOrder::Route::Stage || !c.separation) {
          out.pass = false;
          out.detail = "distinct pair not separated: " + pair_text(x, y);
        } else {
          std::uint64_t stage = c.separation->stage;
          const Elem& lo = expect == Ordering::LT ? x : y;
          const Elem& hi = expect == Ordering::LT ? y : x;
          Rational vlo = reals.map(lo).lower(stage);
          Rational vhi = reals.map(hi).lower(stage);
          if (!(vhi - vlo >= c.separation->gap)) {
            out.pass = false;
            out.detail = "real gap not realized on " + pair_text(x, y);
          }
        }
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"jumps.distinct_witness_rationals", true, ""};
    if (jump_cardinality(t) == CardinalClass::finite(0)) {
      out.detail = "no jumps to witness";
    } else {
      RealEmbedding reals(t);
      JumpStream jumps(t);
      std::set<std::string> seen;
      for (std::uint64_t i = 0; i < 100 && out.pass; ++i) {
        auto j = jumps.next();
        if (!j) break;
        Rational q = jump_rational(reals, *j);
        if (!seen.insert(to_string(q)).second) {
          out.pass = false;
          out.detail = "witness rational repeated: " + to_string(q);
          break;
        }
        // Strictly inside the image gap, certified at a finite stage.
        Separation sep = reals.find_separator(j->left, j->right);
        std::uint64_t stage = sep.stage + 2;
        Rational vl = reals.map(j->left).lower(stage);
        Rational vr = reals.map(j->right).lower(stage);
        if (!(q > vl + StagedReal::error_bound(stage)) || !(q < vr)) {
          out.pass = false;
          out.detail = "witness not strictly inside the gap of " +
                       pair_text(j->left, j->right);
        }
      }
    }
    result.add(std::move(out));
  }

  return result;
}

// ---------------------------------------------------------------------------
// homog suite

namespace {

Elem random_q2_elem(SplitMix64& rng) {
  Integer num(static_cast<unsigned long>(rng.below(40)));
  if (rng.below(2) == 1) num = -num;
  Integer den(static_cast<unsigned long>(1 + rng.below(12)));
  return Elem::pair(Elem::rational(make_rational(num, den)),
                    static_cast<int>(rng.below(2)));
}

Rational random_rational(SplitMix64& rng, std::uint64_t num_bound,
                         std::uint64_t den_bound) {
  Integer num(static_cast<unsigned long>(rng.below(num_bound)));
  if (rng.below(2) == 1) num = -num;
  Integer den(static_cast<unsigned long>(1 + rng.below(den_bound)));
  return make_rational(num, den);
}

}  // namespace

PartialMap random_partial_map(SplitMix64& rng, std::uint64_t max_size,
                              bool allow_j_groups) {
  std::uint64_t size = 1 + rng.below(max_size);
  std::set<Rational> src_set;
  std::set<Rational> dst_set;
  while (src_set.size() < size) src_set.insert(random_rational(rng, 60, 9));
  while (dst_set.size() < size) dst_set.insert(random_rational(rng, 60, 9));
  std::vector<Rational> srcs(src_set.begin(), src_set.end());
  std::vector<Rational> dsts(dst_set.begin(), dst_set.end());
  std::vector<MapPair> pairs;
  for (std::uint64_t i = 0; i < size; ++i) {
    // Each quotient point contributes one or both bits, consistently.
    std::uint64_t which = rng.below(allow_j_groups ? 3 : 2);
    if (which == 0 || which == 2) {
      pairs.push_back(MapPair{Elem::pair(Elem::rational(srcs[i]), 0),
                              Elem::pair(Elem::rational(dsts[i]), 0)});
    }
    if (which == 1 || which == 2) {
      pairs.push_back(MapPair{Elem::pair(Elem::rational(srcs[i]), 1),
                              Elem::pair(Elem::rational(dsts[i]), 1)});
    }
  }
  return PartialMap(std::move(pairs));
}

CorruptedMap random_corrupted_map(SplitMix64& rng) {
  std::uint64_t corruption = rng.below(3);
  if (corruption == 0) {
    // Bit flip. Singleton quotient points keep the flipped target from
    // colliding with a J-partner's target.
    PartialMap pm = random_partial_map(rng, 5, /*allow_j_groups=*/false);
    auto pairs = pm.pairs();
    std::size_t i = rng.below(pairs.size());
    pairs[i].dst = Elem::pair(pairs[i].dst.inner(), 1 - pairs[i].dst.bit());
    ViolationKind expected = pairs[i].src.bit() == 0 ? ViolationKind::JumpLeft
                                                     : ViolationKind::JumpRight;
    return CorruptedMap{PartialMap(std::move(pairs)), expected};
  }
  if (corruption == 1) {
    // Order reversal: transpose two target rationals across the whole map.
    // The transposition keeps targets distinct and J-pairs intact, so the
    // first violated relation is the order itself.
    PartialMap pm = random_partial_map(rng, 5);
    while (pm.pairs().size() < 2 ||
           pm.pairs().front().dst.inner() == pm.pairs().back().dst.inner()) {
      pm = random_partial_map(rng, 5);
    }
    auto pairs = pm.pairs();
    Elem r1 = pairs.front().dst.inner();
    Elem r2 = pairs.back().dst.inner();
    for (MapPair& p : pairs) {
      if (p.dst.inner() == r1) {
        p.dst = Elem::pair(r2, p.dst.bit());
      } else if (p.dst.inner() == r2) {
        p.dst = Elem::pair(r1, p.dst.bit());
      }
    }
    return CorruptedMap{PartialMap(std::move(pairs)), ViolationKind::Order};
  }
  // J-pair split: (q,0) and (q,1) sent over different target rationals.
  Rational q = random_rational(rng, 20, 4);
  Rational r1 = random_rational(rng, 20, 4);
  Rational r2 = r1 + 1;
  std::vector<MapPair> split = {
      MapPair{Elem::pair(Elem::rational(q), 0), Elem::pair(Elem::rational(r1), 0)},
      MapPair{Elem::pair(Elem::rational(q), 1), Elem::pair(Elem::rational(r2), 1)}};
  return CorruptedMap{PartialMap(std::move(split)), ViolationKind::JumpPair};
}

SuiteResult verify_homog(const OrderTerm& t, const VerifyParams& p) {
  SuiteResult result{"homog", {}, true};
  if (!(normalize(t) == q_times2())) {
    result.add({"carrier", true, "homogeneity suite applies to Q*2 only; skipped"});
    return result;
  }
  SplitMix64 rng(p.seed);

  {
    CheckOutcome out{"extend.extends_and_preserves", true, ""};
    for (std::uint64_t m = 0; m < 50 && out.pass; ++m) {
      PartialMap pm = random_partial_map(rng, 6);
      Automorphism g = Automorphism::extend(pm);
      for (const MapPair& pair : pm.pairs()) {
        if (!(g.apply(pair.src, Direction::Fwd) == pair.dst)) {
          out.pass = false;
          out.detail = "extension does not extend the map at " +
                       format_elem(pair.src);
          break;
        }
      }
      for (std::uint64_t i = 0; i < 40 && out.pass; ++i) {
        Elem a = random_q2_elem(rng);
        Elem b = random_q2_elem(rng);
        Elem ga = g.apply(a, Direction::Fwd);
        Elem gb = g.apply(b, Direction::Fwd);
        if (compare(q_times2(), a, b) != compare(q_times2(), ga, gb)) {
          out.pass = false;
          out.detail = "order not preserved on " + pair_text(a, b);
        }
        if (ga.bit() != a.bit()) {
          out.pass = false;
          out.detail = "bit not preserved at " + format_elem(a);
        }
        if (!(g.apply(ga, Direction::Inv) == a)) {
          out.pass = false;
          out.detail = "inverse does not undo at " + format_elem(a);
        }
        // The commuting square with the quotient.
        if (quotient_map(ga) != g.base().eval(quotient_map(a))) {
          out.pass = false;
          out.detail = "quotient square broken at " + format_elem(a);
        }
      }
    }
    result.add(std::move(out));
  }

  {
    CheckOutcome out{"validate.rejects_corruptions", true, ""};
    for (std::uint64_t m = 0; m < 30 && out.pass; ++m) {
      CorruptedMap cm = random_corrupted_map(rng);
      ValidationResult r = validate_partial_map(cm.map);
      if (r.valid || r.violation->kind != cm.expected) {
        out.pass = false;
        out.detail = "corruption not rejected as " + to_string(cm.expected);
      }
    }
    result.add(std::move(out));
  }

  return result;
}

std::vector<SuiteResult> verify_all(const OrderTerm& t, const VerifyParams& p) {
  std::vector<SuiteResult> results;
  results.push_back(verify_order(t, p));
  results.push_back(verify_enumeration(t, p));
  results.push_back(verify_dense(t, p));
  results.push_back(verify_embed(t, p));
  if (normalize(t) == q_times2()) {
    results.push_back(verify_homog(t, p));
  }
  return results;
}

std::vector<SuiteResult> verify_suite(const OrderTerm& t, const std::string& name,
                                      const VerifyParams& p) {
  if (name == "all") return verify_all(t, p);
  if (name == "order") return {verify_order(t, p)};
  if (name == "enumeration") return {verify_enumeration(t, p)};
  if (name == "dense") return {verify_dense(t, p)};
  if (name == "embed") return {verify_embed(t, p)};
  if (name == "homog") return {verify_homog(t, p)};
  throw DomainError("unknown_suite",
                    "unknown verification suite \"" + name +
                        "\" (order, enumeration, dense, embed, homog, all)");
}

}  // namespace linord
