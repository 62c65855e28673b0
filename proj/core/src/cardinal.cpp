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

#include "linord/cardinal.hpp"

#include <limits>
#include <ostream>

#include "linord/error.hpp"

namespace linord {

std::uint64_t CardinalClass::count() const {
  if (kind_ != Kind::Finite) {
    throw DomainError("not_finite", "count() requires a finite cardinality");
  }
  return n_;
}

bool CardinalClass::leq(const CardinalClass& other) const {
  if (kind_ == other.kind_) {
    return kind_ != Kind::Finite || n_ <= other.n_;
  }
  return static_cast<int>(kind_) < static_cast<int>(other.kind_);
}

CardinalClass operator+(const CardinalClass& a, const CardinalClass& b) {
  using Kind = CardinalClass::Kind;
  if (a.kind_ == Kind::Continuum || b.kind_ == Kind::Continuum) {
    return CardinalClass::continuum();
  }
  if (a.kind_ == Kind::Aleph0 || b.kind_ == Kind::Aleph0) {
    return CardinalClass::aleph0();
  }
  if (a.n_ > std::numeric_limits<std::uint64_t>::max() - b.n_) {
    throw OverflowError("finite cardinality sum overflows 64 bits");
  }
  return CardinalClass::finite(a.n_ + b.n_);
}

CardinalClass CardinalClass::max(const CardinalClass& a,
                                 const CardinalClass& b) {
  return a.leq(b) ? b : a;
}

CardinalClass CardinalClass::doubled() const {
  if (kind_ != Kind::Finite) return *this;
  if (n_ > std::numeric_limits<std::uint64_t>::max() / 2) {
    throw OverflowError("finite cardinality doubling overflows 64 bits");
  }
  return finite(2 * n_);
}

std::string CardinalClass::to_string() const {
  switch (kind_) {
    case Kind::Finite:
      return "fin:" + std::to_string(n_);
    case Kind::Aleph0:
      return "aleph0";
    case Kind::Continuum:
      return "continuum";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const CardinalClass& c) {
  return os << c.to_string();
}

}  // namespace linord
