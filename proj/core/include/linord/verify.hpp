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

#ifndef LINORD_VERIFY_HPP
#define LINORD_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linord/elem.hpp"
#include "linord/homog.hpp"
#include "linord/rng.hpp"
#include "linord/term.hpp"

namespace linord {

// Seeded property suites over a term, runnable from the CLI (`verify`) and
// reused by the test binaries. All sampling is deterministic in the seed.

struct VerifyParams {
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;  // pair/point samples per check
  std::uint64_t budget = 2000;   // enumeration prefix for sampling & density
  std::uint64_t pairs = 200;     // density check pairs
  std::uint64_t prefix = 200;    // back-and-forth placement prefix
};

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or short note; empty when clean
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckOutcome> checks;
  bool pass = true;

  void add(CheckOutcome outcome);
};

/// Random valid element via a structural walk (independent of the
/// enumeration); nullopt for empty carriers.
std::optional<Elem> random_element(const OrderTerm& t, SplitMix64& rng,
                                   std::uint64_t magnitude = 50);

/// Random valid partial map on Q*2 with up to max_size quotient points.
/// With allow_j_groups, some points contribute both bits (a J-pair).
PartialMap random_partial_map(SplitMix64& rng, std::uint64_t max_size,
                              bool allow_j_groups = true);

/// A deliberately corrupted map — bit flip, order transposition, or
/// J-pair split — together with the violation kind validation must report.
struct CorruptedMap {
  PartialMap map;
  ViolationKind expected;
};
CorruptedMap random_corrupted_map(SplitMix64& rng);

SuiteResult verify_order(const OrderTerm& t, const VerifyParams& p);
SuiteResult verify_enumeration(const OrderTerm& t, const VerifyParams& p);
SuiteResult verify_dense(const OrderTerm& t, const VerifyParams& p);
SuiteResult verify_embed(const OrderTerm& t, const VerifyParams& p);
SuiteResult verify_homog(const OrderTerm& t, const VerifyParams& p);

/// All suites that apply to t.
std::vector<SuiteResult> verify_all(const OrderTerm& t, const VerifyParams& p);

/// One suite by name ("order", "enumeration", "dense", "embed", "homog",
/// "all"). Throws DomainError("unknown_suite").
std::vector<SuiteResult> verify_suite(const OrderTerm& t, const std::string& name,
                                      const VerifyParams& p);

}  // namespace linord

#endif  // LINORD_VERIFY_HPP
