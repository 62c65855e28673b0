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

#include "linord/rational.hpp"

#include <cctype>

#include "linord/error.hpp"

namespace linord {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw DomainError("zero_denominator", "rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow2(std::int64_t exp) {
  if (exp >= 0) {
    Integer n = 1;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(exp));
    return Rational(n);
  }
  Integer d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp));
  return make_rational(1, d);
}

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw ParseError(0, "expected an integer, got \"" + std::string(text) + "\"");
  }
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw ParseError(slash + 1, "zero denominator in \"" + std::string(text) + "\"");
  }
  return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string decimal_string(const Rational& q) {
  Integer den = q.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_even_p(den.get_mpz_t())) {
    mpz_fdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), 1);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
    ++fives;
  }
  if (den != 1) {
    return to_string(q);  // not an exact decimal
  }
  unsigned long digits = twos > fives ? twos : fives;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer scaled = q.get_num() * scale / q.get_den();  // exact by construction
  bool negative = scaled < 0;
  Integer magnitude = negative ? Integer(-scaled) : scaled;
  std::string body = magnitude.get_str();
  if (body.size() <= digits) {
    body.insert(0, digits - body.size() + 1, '0');
  }
  std::string out;
  if (negative) out += '-';
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    std::string frac = body.substr(body.size() - digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) {
      out += '.';
      out += frac;
    }
  }
  return out;
}

}  // namespace linord
