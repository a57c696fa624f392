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

// Arithmetic and element classification in Z_M.
//
// Elements are plain residues in [0, M). The ring they live in is always
// passed explicitly, so any number of rings can be used side by side. The
// prime-power specific pieces (valuation, the partner lemmas) refuse
// composite moduli.

#ifndef MINRING_RING_HPP_
#define MINRING_RING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace minring {

using Element = std::uint32_t;

// Largest modulus accepted by MakeRing.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 16;

struct PrimeFactor {
  std::uint64_t prime;
  int exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

class RingSpec {
 public:
  std::uint64_t modulus() const { return modulus_; }
  const std::vector<PrimeFactor>& prime_factors() const { return factors_; }
  bool is_prime_power() const { return factors_.size() == 1; }

  // Present iff the ring is Z_{p^n}.
  std::optional<std::uint64_t> p() const;
  std::optional<int> n() const;

  bool contains(std::uint64_t x) const { return x < modulus_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element neg(Element a) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  friend RingSpec MakeRing(std::uint64_t modulus);
  RingSpec() = default;

  std::uint64_t modulus_ = 0;
  std::vector<PrimeFactor> factors_;
};

// Throws kInvalidModulus unless 2 <= modulus <= kMaxModulus.
RingSpec MakeRing(std::uint64_t modulus);

enum class ElementClass { kZero, kUnit, kZeroDivisor };

const char* ElementClassName(ElementClass c);

ElementClass Classify(const RingSpec& ring, Element x);
inline bool IsUnit(const RingSpec& ring, Element x) {
  return Classify(ring, x) == ElementClass::kUnit;
}
inline bool IsZeroDivisor(const RingSpec& ring, Element x) {
  return Classify(ring, x) == ElementClass::kZeroDivisor;
}

// Ascending; this order fixes the indexing u_1 < u_2 < ... used everywhere.
std::vector<Element> Units(const RingSpec& ring);
// Nonzero non-units, ascending.
std::vector<Element> ZeroDivisors(const RingSpec& ring);

// Multiplicative inverse by extended Euclid. Throws kNotInvertible.
Element Inverse(const RingSpec& ring, Element u);

// x = p^k * unit_part (mod p^n) with 0 <= k < n.
struct Valuation {
  int k;
  Element unit_part;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

// unit_part is x / p^k taken as an integer, so it is the smallest
// representative. Throws kUnsupportedRing or kZeroHasNoValuation.
Valuation ValuationOf(const RingSpec& ring, Element x);

// The unique unit u' with 1 + u*u' = 0, i.e. -u^{-1}.
Element NegUnitPartner(const RingSpec& ring, Element u);

// The unique zero divisor d' with d + d' = 0. Throws kWrongClass.
Element AdditivePartner(const RingSpec& ring, Element d);

// Throws kUnsupportedRing when the ring is not Z_{p^n}. `what` names the
// operation in the message.
void RequirePrimePower(const RingSpec& ring, const char* what);
void RequireElement(const RingSpec& ring, std::uint64_t x);

}  // namespace minring

#endif  // MINRING_RING_HPP_
