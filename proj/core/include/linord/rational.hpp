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

#ifndef LINORD_RATIONAL_HPP
#define LINORD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace linord {

// All arithmetic in the library is exact. GMP supplies the bignum layer;
// every Rational is kept canonical (reduced, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws DomainError("zero_denominator") if
/// den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Exact power of two, 2^exp, for any (possibly negative) exponent.
Rational pow2(std::int64_t exp);

/// Parses an optionally signed decimal integer. Throws ParseError.
Integer parse_integer(std::string_view text);

/// Parses "p/q" or "k". The result is canonicalized; "2/4" yields 1/2.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Exact decimal rendering when the denominator is of the form 2^a * 5^b
/// (every staged approximant is dyadic, so this covers embedding output);
/// falls back to the fraction form otherwise.
std::string decimal_string(const Rational& q);

}  // namespace linord

#endif  // LINORD_RATIONAL_HPP
