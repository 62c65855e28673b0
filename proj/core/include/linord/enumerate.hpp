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

#ifndef LINORD_ENUMERATE_HPP
#define LINORD_ENUMERATE_HPP

#include <cstdint>
#include <optional>

#include "linord/elem.hpp"
#include "linord/term.hpp"

namespace linord {

/// The k-th point of the fixed enumeration of t, or nullopt past the end
/// of a finite carrier. The schemes are pinned so indices are reproducible:
///   fin(n), w : 0, 1, 2, ...
///   w*        : -1, -2, -3, ...
///   Z         : 0, 1, -1, 2, -2, ...
///   Q         : by height |p|+q of the reduced fraction, ascending, and
///               within a height by numerator: 0, -1, 1, -2, -1/2, 1/2, 2, ...
///   sums      : round-robin over the parts, skipping exhausted ones
///   t*2       : (e0,0), (e0,1), (e1,0), (e1,1), ...
/// Every valid point appears exactly once. Throws SymbolicTermError if t
/// contains R.
std::optional<Elem> nth_elem(const OrderTerm& t, std::uint64_t k);

/// Position of e in the enumeration of t; inverse of nth_elem. Throws
/// OverflowError when the index does not fit 64 bits or the rational
/// height exceeds the supported range (|p|+q <= 100000).
std::uint64_t index_of(const OrderTerm& t, const Elem& e);

/// Stateful cursor over the enumeration; exclusively owned by one consumer.
class ElemStream {
 public:
  explicit ElemStream(OrderTerm t) : term_(std::move(t)) {}

  std::optional<Elem> next();

  /// Index of the element the next call to next() would return.
  std::uint64_t position() const { return k_; }

 private:
  OrderTerm term_;
  std::uint64_t k_ = 0;
};

}  // namespace linord

#endif  // LINORD_ENUMERATE_HPP
