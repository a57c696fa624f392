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

#include "minring/ring.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "minring/errors.hpp"

namespace minring {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidModulus: return "invalid-modulus";
    case ErrorKind::kNotInvertible: return "not-invertible";
    case ErrorKind::kUnsupportedRing: return "unsupported-ring";
    case ErrorKind::kZeroHasNoValuation: return "zero-has-no-valuation";
    case ErrorKind::kWrongClass: return "wrong-class";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kTooLarge: return "too-large";
    case ErrorKind::kMembership: return "membership";
    case ErrorKind::kZeroCodeword: return "zero-codeword";
    case ErrorKind::kOmissionViolated: return "omission-violated";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

std::optional<std::uint64_t> RingSpec::p() const {
  if (!is_prime_power()) return std::nullopt;
  return factors_.front().prime;
}

std::optional<int> RingSpec::n() const {
  if (!is_prime_power()) return std::nullopt;
  return factors_.front().exponent;
}

Element RingSpec::add(Element a, Element b) const {
  return static_cast<Element>((std::uint64_t{a} + b) % modulus_);
}

Element RingSpec::sub(Element a, Element b) const {
  return static_cast<Element>((std::uint64_t{a} + modulus_ - b % modulus_) %
                              modulus_);
}

Element RingSpec::mul(Element a, Element b) const {
  return static_cast<Element>((std::uint64_t{a} * b) % modulus_);
}

Element RingSpec::neg(Element a) const {
  return a == 0 ? 0 : static_cast<Element>(modulus_ - a);
}

RingSpec MakeRing(std::uint64_t modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw Error(ErrorKind::kInvalidModulus,
                "modulus must be in [2, " + std::to_string(kMaxModulus) +
                    "], got " + std::to_string(modulus));
  }
  RingSpec ring;
  ring.modulus_ = modulus;
  std::uint64_t rest = modulus;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    int e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    ring.factors_.push_back({q, e});
  }
  if (rest > 1) ring.factors_.push_back({rest, 1});
  return ring;
}

const char* ElementClassName(ElementClass c) {
  switch (c) {
    case ElementClass::kZero: return "zero";
    case ElementClass::kUnit: return "unit";
    case ElementClass::kZeroDivisor: return "zero-divisor";
  }
  return "unknown";
}

void RequireElement(const RingSpec& ring, std::uint64_t x) {
  if (!ring.contains(x)) {
    throw Error(ErrorKind::kShape, std::to_string(x) + " is not a residue mod " +
                                       std::to_string(ring.modulus()));
  }
}

void RequirePrimePower(const RingSpec& ring, const char* what) {
  if (!ring.is_prime_power()) {
    throw Error(ErrorKind::kUnsupportedRing,
                std::string(what) + " requires prime-power modulus, got " +
                    std::to_string(ring.modulus()));
  }
}

ElementClass Classify(const RingSpec& ring, Element x) {
  RequireElement(ring, x);
  if (x == 0) return ElementClass::kZero;
  return std::gcd(std::uint64_t{x}, ring.modulus()) == 1
             ? ElementClass::kUnit
             : ElementClass::kZeroDivisor;
}

std::vector<Element> Units(const RingSpec& ring) {
  std::vector<Element> out;
  for (std::uint64_t x = 1; x < ring.modulus(); ++x) {
    if (std::gcd(x, ring.modulus()) == 1) out.push_back(static_cast<Element>(x));
  }
  return out;
}

std::vector<Element> ZeroDivisors(const RingSpec& ring) {
  std::vector<Element> out;
  for (std::uint64_t x = 1; x < ring.modulus(); ++x) {
    if (std::gcd(x, ring.modulus()) != 1) out.push_back(static_cast<Element>(x));
  }
  return out;
}

Element Inverse(const RingSpec& ring, Element u) {
  if (Classify(ring, u) != ElementClass::kUnit) {
    throw Error(ErrorKind::kNotInvertible,
                std::to_string(u) + " is not a unit mod " +
                    std::to_string(ring.modulus()));
  }
  // Invariant: old_s * u == old_r (mod M).
  std::int64_t old_r = u, r = static_cast<std::int64_t>(ring.modulus());
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  const auto m = static_cast<std::int64_t>(ring.modulus());
  return static_cast<Element>(((old_s % m) + m) % m);
}

Valuation ValuationOf(const RingSpec& ring, Element x) {
  RequirePrimePower(ring, "valuation");
  RequireElement(ring, x);
  if (x == 0) {
    throw Error(ErrorKind::kZeroHasNoValuation, "zero has no valuation");
  }
  const std::uint64_t p = *ring.p();
  Valuation v{0, x};
  while (v.unit_part % p == 0) {
    v.unit_part = static_cast<Element>(v.unit_part / p);
    ++v.k;
  }
  return v;
}

Element NegUnitPartner(const RingSpec& ring, Element u) {
  return ring.neg(Inverse(ring, u));
}

Element AdditivePartner(const RingSpec& ring, Element d) {
  const ElementClass c = Classify(ring, d);
  if (c != ElementClass::kZeroDivisor) {
    throw Error(ErrorKind::kWrongClass,
                std::to_string(d) + " is a " + ElementClassName(c) +
                    ", expected a zero divisor");
  }
  return ring.neg(d);
}

}  // namespace minring
