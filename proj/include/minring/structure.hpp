// Copyright 2026 The minring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive checks of the structural facts about Z_{p^n} that the
// construction depends on, and the five-way decomposition of coordinate
// pairs. Every sweep covers its whole domain; nothing is sampled.

#ifndef MINRING_STRUCTURE_HPP_
#define MINRING_STRUCTURE_HPP_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "minring/ring.hpp"

namespace minring {

enum class LemmaId {
  kZdClosure,
  kUnitZdSum,
  kZdTranslates,
  kUnitOrbit,
  kUniqueNegPartner,
  kUniqueAdditivePartner,
};

std::string_view LemmaName(LemmaId id);

struct LemmaReport {
  LemmaId lemma_id;
  bool holds = true;
  // Elements of the first failing case, empty when holds.
  std::vector<Element> witness;
  std::uint64_t cases_checked = 0;
};

// d_i + d_j and d_i * d_j are zero or zero divisors, over all ordered pairs.
LemmaReport VerifyZdClosure(const RingSpec& ring);
// u + d is a unit, over all (u, d).
LemmaReport VerifyUnitZdSum(const RingSpec& ring);
// For every d, ZdTranslates(d) is (D \ {d}) u {0} without repeats.
LemmaReport VerifyZdTranslates(const RingSpec& ring);
// For every u, UnitOrbit(u) hits every zero divisor and 0 exactly once.
LemmaReport VerifyUnitOrbit(const RingSpec& ring);
// For every u exactly one unit u'' has 1 + u*u'' = 0, and it is
// NegUnitPartner(u).
LemmaReport VerifyUniqueNegPartner(const RingSpec& ring);
// For every d exactly one zero divisor d'' has d + d'' = 0, and it is
// AdditivePartner(d).
LemmaReport VerifyUniqueAdditivePartner(const RingSpec& ring);

// All six reports in LemmaId order.
std::vector<LemmaReport> VerifyAllLemmas(const RingSpec& ring);

// {d + d_j : d_j in D}, in the order of ZeroDivisors(ring).
std::vector<Element> ZdTranslates(const RingSpec& ring, Element d);
// {1 + u * u_j : u_j in U}, in the order of Units(ring).
std::vector<Element> UnitOrbit(const RingSpec& ring, Element u);

enum class PairType { kE1, kE2, kUnitCol, kDCol, kDStarCol };

std::string_view PairTypeName(PairType t);

// (c1, c2) == scalar * canonical, where canonical is one of
// (1,0), (0,1), (1,u), (1,d), (d,1) according to pair_type.
struct PairDecomposition {
  PairType pair_type;
  Element scalar;
  std::pair<Element, Element> canonical;

  friend bool operator==(const PairDecomposition&,
                         const PairDecomposition&) = default;
};

// Case order: c1 == 0 first (so (0,0) is E2 with scalar 0), then c2 == 0,
// then by the unit/zero-divisor classes of c1 and c2. Two zero divisors are
// split on their valuations.
PairDecomposition ClassifyPair(const RingSpec& ring, Element c1, Element c2);

}  // namespace minring

#endif  // MINRING_STRUCTURE_HPP_
