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

#ifndef LINORD_CARDINAL_HPP
#define LINORD_CARDINAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace linord {

/// Size of a carrier or jump set: Fin(n), aleph_0, or continuum. These are
/// the only cardinalities the term algebra can produce.
class CardinalClass {
 public:
  enum class Kind { Finite, Aleph0, Continuum };

  static CardinalClass finite(std::uint64_t n) {
    return CardinalClass(Kind::Finite, n);
  }
  static CardinalClass aleph0() { return CardinalClass(Kind::Aleph0, 0); }
  static CardinalClass continuum() { return CardinalClass(Kind::Continuum, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// True for Fin(n) and aleph_0.
  bool is_countable() const { return kind_ != Kind::Continuum; }

  /// Finite count; throws DomainError("not_finite") otherwise.
  std::uint64_t count() const;

  bool leq(const CardinalClass& other) const;

  /// Cardinal addition: Fin(a)+Fin(b)=Fin(a+b) (checked), infinite classes
  /// absorb. Commutative and associative.
  friend CardinalClass operator+(const CardinalClass& a,
                                 const CardinalClass& b);

  static CardinalClass max(const CardinalClass& a, const CardinalClass& b);

  /// Multiplication by Fin(2): finite counts double, infinite classes are
  /// unchanged.
  CardinalClass doubled() const;

  friend bool operator==(const CardinalClass& a, const CardinalClass& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.n_ == b.n_);
  }
  friend bool operator!=(const CardinalClass& a, const CardinalClass& b) {
    return !(a == b);
  }

  /// "fin:n" | "aleph0" | "continuum" — the serialized form used by report
  /// JSON.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const CardinalClass& c);

 private:
  CardinalClass(Kind kind, std::uint64_t n) : kind_(kind), n_(n) {}

  Kind kind_;
  std::uint64_t n_;
};

}  // namespace linord

#endif  // LINORD_CARDINAL_HPP
