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

#include "linord/enumerate.hpp"

#include <limits>
#include <numeric>

#include "linord/error.hpp"

namespace linord {

namespace {

constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kMaxRationalHeight = 100000;

Integer to_integer(std::uint64_t n) {
  return Integer(static_cast<unsigned long>(n));
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > kNoLimit - b) throw OverflowError("enumeration index overflows 64 bits");
  return a + b;
}

// Carrier size as a saturating count: kNoLimit encodes an infinite part.
std::uint64_t carrier_size(const OrderTerm& t) {
  CardinalClass c = cardinality(t);
  if (!c.is_finite()) return kNoLimit;
  return c.count();
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Euler phi by trial division; h <= kMaxRationalHeight keeps this cheap.
std::uint64_t phi_u64(std::uint64_t h) {
  std::uint64_t result = h;
  std::uint64_t m = h;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Rationals are enumerated by height |p|+q of the reduced fraction p/q,
// ascending, and within a height by numerator ascending (negatives, then
// positives). Height 1 contributes 0 alone; height h >= 2 contributes
// 2*phi(h) fractions since gcd(|p|, q) = gcd(|p|, h).
std::uint64_t rationals_at_height(std::uint64_t h) {
  return h == 1 ? 1 : 2 * phi_u64(h);
}

Elem nth_rational(std::uint64_t k) {
  std::uint64_t h = 1;
  while (true) {
    std::uint64_t cnt = rationals_at_height(h);
    if (k < cnt) break;
    k -= cnt;
    ++h;
  }
  if (h == 1) return Elem::rational(Rational(0));
  for (std::uint64_t a = h - 1; a >= 1; --a) {  // negatives, numerator ascending
    if (gcd_u64(a, h) != 1) continue;
    if (k == 0) {
      return Elem::rational(make_rational(-Integer(to_integer(a)),
                                          to_integer(h - a)));
    }
    --k;
  }
  for (std::uint64_t a = 1; a <= h - 1; ++a) {  // positives
    if (gcd_u64(a, h) != 1) continue;
    if (k == 0) {
      return Elem::rational(make_rational(to_integer(a), to_integer(h - a)));
    }
    --k;
  }
  throw DomainError("internal", "rational enumeration out of bounds");
}

std::uint64_t rational_index(const Rational& q) {
  Integer abs_num = abs(q.get_num());
  Integer height = abs_num + q.get_den();
  if (height > to_integer(kMaxRationalHeight)) {
    throw OverflowError("rational " + to_string(q) +
                        " exceeds the supported enumeration height");
  }
  std::uint64_t h = height.get_ui();
  std::uint64_t index = 0;
  for (std::uint64_t hh = 1; hh < h; ++hh) {
    index = checked_add(index, rationals_at_height(hh));
  }
  std::uint64_t a = abs_num.get_ui();
  if (h == 1) return index;
  if (q < 0) {
    for (std::uint64_t aa = h - 1; aa > a; --aa) {
      if (gcd_u64(aa, h) == 1) ++index;
    }
    return index;
  }
  index += phi_u64(h);  // all negatives precede the positives
  for (std::uint64_t aa = 1; aa < a; ++aa) {
    if (gcd_u64(aa, h) == 1) ++index;
  }
  return index;
}

// Round-robin over sum parts: in round r every part with more than r
// elements emits its r-th element, in part order. E(r) emissions happen
// before round r starts.
std::uint64_t emissions_before_round(const std::vector<std::uint64_t>& sizes,
                                     std::uint64_t r) {
  std::uint64_t total = 0;
  for (std::uint64_t s : sizes) {
    std::uint64_t take = s < r ? s : r;
    if (total > kNoLimit - take) return kNoLimit;
    total += take;
  }
  return total;
}

std::optional<Elem> nth_impl(const OrderTerm& t, std::uint64_t k);

std::optional<Elem> nth_sum(const OrderTerm& t, std::uint64_t k) {
  const auto& parts = t.parts();
  std::vector<std::uint64_t> sizes;
  sizes.reserve(parts.size());
  std::uint64_t total = 0;
  for (const OrderTerm& part : parts) {
    std::uint64_t s = carrier_size(part);
    sizes.push_back(s);
    total = (s == kNoLimit || total > kNoLimit - s) ? kNoLimit : total + s;
  }
  if (total != kNoLimit && k >= total) return std::nullopt;
  // Largest r with E(r) <= k; E grows by at least one per live round.
  std::uint64_t lo = 0, hi = k + 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (emissions_before_round(sizes, mid) <= k) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  std::uint64_t round = lo;
  std::uint64_t offset = k - emissions_before_round(sizes, round);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (sizes[i] > round) {
      if (offset == 0) {
        auto inner = nth_impl(parts[i], round);
        if (!inner) throw DomainError("internal", "sum round decode failed");
        return Elem::in_sum(i, *inner);
      }
      --offset;
    }
  }
  throw DomainError("internal", "sum round-robin decode failed");
}

std::optional<Elem> nth_impl(const OrderTerm& t, std::uint64_t k) {
  switch (t.kind()) {
    case TermKind::Finite:
      if (k >= t.finite_size()) return std::nullopt;
      return Elem::nat(to_integer(k));
    case TermKind::Omega:
      return Elem::nat(to_integer(k));
    case TermKind::OmegaStar:
      return Elem::neg_int(-Integer(to_integer(k)) - 1);
    case TermKind::Ints: {
      if (k == 0) return Elem::integer(0);
      if (k % 2 == 1) return Elem::integer(to_integer((k + 1) / 2));
      return Elem::integer(-Integer(to_integer(k / 2)));
    }
    case TermKind::Rats:
      return nth_rational(k);
    case TermKind::Reals:
      throw SymbolicTermError();
    case TermKind::Sum:
      return nth_sum(t, k);
    case TermKind::Times2: {
      auto inner = nth_impl(t.base(), k / 2);
      if (!inner) return std::nullopt;
      return Elem::pair(*inner, static_cast<int>(k % 2));
    }
  }
  throw DomainError("internal", "unknown term kind");
}

std::uint64_t index_impl(const OrderTerm& t, const Elem& e) {
  switch (t.kind()) {
    case TermKind::Finite:
    case TermKind::Omega: {
      const Integer& k = e.int_value();
      if (!k.fits_ulong_p()) throw OverflowError("element index overflows 64 bits");
      return k.get_ui();
    }
    case TermKind::OmegaStar: {
      Integer k = -e.int_value() - 1;
      if (!k.fits_ulong_p()) throw OverflowError("element index overflows 64 bits");
      return k.get_ui();
    }
    case TermKind::Ints: {
      const Integer& k = e.int_value();
      Integer idx;
      if (k > 0) {
        idx = 2 * k - 1;
      } else {
        idx = -2 * k;
      }
      if (!idx.fits_ulong_p()) throw OverflowError("element index overflows 64 bits");
      return idx.get_ui();
    }
    case TermKind::Rats:
      return rational_index(e.rat_value());
    case TermKind::Reals:
      throw SymbolicTermError();
    case TermKind::Sum: {
      const auto& parts = t.parts();
      std::size_t i = e.sum_index();
      std::uint64_t j = index_impl(parts[i], e.inner());
      // Part i emits its j-th element in round j: count everything emitted
      // in earlier rounds plus the earlier live parts of round j.
      std::uint64_t index = 0;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        std::uint64_t s = carrier_size(parts[p]);
        index = checked_add(index, s < j ? s : j);
        if (p < i && s > j) index = checked_add(index, 1);
      }
      return index;
    }
    case TermKind::Times2: {
      std::uint64_t j = index_impl(t.base(), e.inner());
      if (j > (kNoLimit - 1) / 2) throw OverflowError("element index overflows 64 bits");
      return 2 * j + static_cast<std::uint64_t>(e.bit());
    }
  }
  throw DomainError("internal", "unknown term kind");
}

}  // namespace

std::optional<Elem> nth_elem(const OrderTerm& t, std::uint64_t k) {
  if (contains_reals(t)) throw SymbolicTermError();
  return nth_impl(t, k);
}

std::uint64_t index_of(const OrderTerm& t, const Elem& e) {
  if (contains_reals(t)) throw SymbolicTermError();
  validate(t, e);
  return index_impl(t, e);
}

std::optional<Elem> ElemStream::next() {
  auto e = nth_elem(term_, k_);
  if (e) ++k_;
  return e;
}

}  // namespace linord
