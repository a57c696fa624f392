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

#include <algorithm>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "minring/errors.hpp"
#include "oracle.hpp"

namespace minring {
namespace {

using ::testing::ElementsAre;

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected minring::Error";
  return ErrorKind::kParse;
}

std::uint64_t IntPow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST(MakeRingTest, PrimePower) {
  const RingSpec r = MakeRing(4);
  EXPECT_EQ(r.modulus(), 4u);
  EXPECT_THAT(r.prime_factors(), ElementsAre(PrimeFactor{2, 2}));
  EXPECT_TRUE(r.is_prime_power());
  EXPECT_EQ(r.p(), 2u);
  EXPECT_EQ(r.n(), 2);
}

TEST(MakeRingTest, Composite) {
  const RingSpec r = MakeRing(6);
  EXPECT_THAT(r.prime_factors(), ElementsAre(PrimeFactor{2, 1}, PrimeFactor{3, 1}));
  EXPECT_FALSE(r.is_prime_power());
  EXPECT_FALSE(r.p().has_value());
  EXPECT_FALSE(r.n().has_value());
}

TEST(MakeRingTest, RejectsBadModulus) {
  EXPECT_EQ(KindOf([] { MakeRing(1); }), ErrorKind::kInvalidModulus);
  EXPECT_EQ(KindOf([] { MakeRing(0); }), ErrorKind::kInvalidModulus);
  EXPECT_EQ(KindOf([] { MakeRing(kMaxModulus + 1); }), ErrorKind::kInvalidModulus);
  EXPECT_NO_THROW(MakeRing(kMaxModulus));
}

TEST(MakeRingTest, FactorizationMultipliesBack) {
  for (std::uint64_t m = 2; m <= 4096; ++m) {
    const RingSpec r = MakeRing(m);
    std::uint64_t prod = 1;
    for (const PrimeFactor& f : r.prime_factors()) prod *= IntPow(f.prime, f.exponent);
    ASSERT_EQ(prod, m);
    ASSERT_EQ(r.is_prime_power(), oracle::IsPrimePower(static_cast<unsigned>(m)));
  }
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(Classify(MakeRing(4), 3), ElementClass::kUnit);
  EXPECT_EQ(Classify(MakeRing(4), 2), ElementClass::kZeroDivisor);
  EXPECT_EQ(Classify(MakeRing(6), 3), ElementClass::kZeroDivisor);
  EXPECT_EQ(Classify(MakeRing(6), 0), ElementClass::kZero);
  EXPECT_EQ(KindOf([] { Classify(MakeRing(6), 6); }), ErrorKind::kShape);
}

TEST(UnitsTest, Examples) {
  EXPECT_THAT(Units(MakeRing(4)), ElementsAre(1, 3));
  EXPECT_THAT(Units(MakeRing(6)), ElementsAre(1, 5));
  EXPECT_THAT(Units(MakeRing(8)), ElementsAre(1, 3, 5, 7));
  EXPECT_THAT(ZeroDivisors(MakeRing(4)), ElementsAre(2));
  EXPECT_THAT(ZeroDivisors(MakeRing(6)), ElementsAre(2, 3, 4));
  EXPECT_THAT(ZeroDivisors(MakeRing(9)), ElementsAre(3, 6));
}

TEST(UnitsTest, CountsForEveryPrimePowerUpTo4096) {
  int rings = 0;
  for (unsigned m = 2; m <= 4096; ++m) {
    if (!oracle::IsPrimePower(m)) continue;
    const RingSpec r = MakeRing(m);
    const std::uint64_t q = r.modulus(), p = *r.p();
    ASSERT_EQ(Units(r).size(), q - q / p) << m;
    ASSERT_EQ(ZeroDivisors(r).size(), q / p - 1) << m;
    ++rings;
  }
  EXPECT_GT(rings, 500);
}

TEST(UnitsTest, ClassificationPartitionsResidues) {
  for (unsigned m : {2u, 4u, 6u, 12u, 27u, 30u, 64u, 210u}) {
    const RingSpec r = MakeRing(m);
    std::vector<Element> all = Units(r);
    const std::vector<Element> zds = ZeroDivisors(r);
    all.insert(all.end(), zds.begin(), zds.end());
    all.push_back(0);
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), m);
    for (Element x = 0; x < m; ++x) ASSERT_EQ(all[x], x);
    const std::vector<unsigned> want = oracle::Units(m);
    EXPECT_EQ(Units(r), std::vector<Element>(want.begin(), want.end()));
    for (Element u : Units(r)) EXPECT_EQ(Classify(r, u), ElementClass::kUnit);
    for (Element d : zds) EXPECT_EQ(Classify(r, d), ElementClass::kZeroDivisor);
  }
}

TEST(InverseTest, Examples) {
  EXPECT_EQ(Inverse(MakeRing(4), 3), 3u);
  EXPECT_EQ(Inverse(MakeRing(9), 2), 5u);
  EXPECT_EQ(KindOf([] { Inverse(MakeRing(4), 2); }), ErrorKind::kNotInvertible);
  EXPECT_EQ(KindOf([] { Inverse(MakeRing(4), 0); }), ErrorKind::kNotInvertible);
}

TEST(InverseTest, ProductIsOne) {
  for (unsigned m : {2u, 9u, 10u, 64u, 625u, 65536u}) {
    const RingSpec r = MakeRing(m);
    for (Element u : Units(r)) ASSERT_EQ(r.mul(u, Inverse(r, u)), 1u) << m << " " << u;
  }
}

TEST(ValuationTest, Examples) {
  const RingSpec z8 = MakeRing(8);
  EXPECT_EQ(ValuationOf(z8, 6), (Valuation{1, 3}));
  EXPECT_EQ(ValuationOf(z8, 5), (Valuation{0, 5}));
  EXPECT_EQ(ValuationOf(z8, 4), (Valuation{2, 1}));
  EXPECT_EQ(KindOf([&] { ValuationOf(z8, 0); }), ErrorKind::kZeroHasNoValuation);
  EXPECT_EQ(KindOf([] { ValuationOf(MakeRing(12), 4); }), ErrorKind::kUnsupportedRing);
}

TEST(ValuationTest, ReconstructsEveryNonzeroElement) {
  for (unsigned m : {2u, 4u, 8u, 9u, 27u, 32u, 125u, 243u, 343u, 729u}) {
    const RingSpec r = MakeRing(m);
    const Element p = static_cast<Element>(*r.p());
    for (Element x = 1; x < m; ++x) {
      const Valuation v = ValuationOf(r, x);
      Element back = v.unit_part;
      for (int i = 0; i < v.k; ++i) back = r.mul(back, p);
      ASSERT_EQ(back, x);
      ASSERT_TRUE(IsUnit(r, v.unit_part));
      ASSERT_LT(v.k, *r.n());
      ASSERT_EQ(v.k == 0, IsUnit(r, x));
    }
  }
}

TEST(PartnerTest, NegUnitPartnerExamples) {
  EXPECT_EQ(NegUnitPartner(MakeRing(4), 1), 3u);
  EXPECT_EQ(NegUnitPartner(MakeRing(4), 3), 1u);
  EXPECT_EQ(NegUnitPartner(MakeRing(9), 2), 4u);
  EXPECT_EQ(KindOf([] { NegUnitPartner(MakeRing(4), 2); }), ErrorKind::kNotInvertible);
}

TEST(PartnerTest, NegUnitPartnerIsTheOnlySolution) {
  for (unsigned m : {3u, 4u, 8u, 9u, 25u, 49u, 81u}) {
    const RingSpec r = MakeRing(m);
    for (Element u : Units(r)) {
      const Element partner = NegUnitPartner(r, u);
      ASSERT_EQ(r.add(1, r.mul(u, partner)), 0u);
      for (Element other : Units(r)) {
        if (other != partner) ASSERT_NE(r.add(1, r.mul(u, other)), 0u);
      }
    }
  }
}

TEST(PartnerTest, AdditivePartner) {
  EXPECT_EQ(AdditivePartner(MakeRing(4), 2), 2u);
  EXPECT_EQ(AdditivePartner(MakeRing(9), 3), 6u);
  EXPECT_EQ(KindOf([] { AdditivePartner(MakeRing(4), 3); }), ErrorKind::kWrongClass);
  EXPECT_EQ(KindOf([] { AdditivePartner(MakeRing(4), 0); }), ErrorKind::kWrongClass);
  for (unsigned m : {4u, 8u, 27u, 32u, 121u}) {
    const RingSpec r = MakeRing(m);
    for (Element d : ZeroDivisors(r)) {
      const Element partner = AdditivePartner(r, d);
      ASSERT_TRUE(IsZeroDivisor(r, partner));
      ASSERT_EQ(AdditivePartner(r, partner), d);
      ASSERT_EQ(r.add(d, partner), 0u);
    }
  }
}

}  // namespace
}  // namespace minring
