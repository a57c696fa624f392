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

#include "minring/structure.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "minring/errors.hpp"
#include "oracle.hpp"

namespace minring {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected minring::Error";
  return ErrorKind::kParse;
}

std::vector<unsigned> PrimePowersUpTo(unsigned limit) {
  std::vector<unsigned> out;
  for (unsigned m = 2; m <= limit; ++m) {
    if (oracle::IsPrimePower(m)) out.push_back(m);
  }
  return out;
}

TEST(LemmaTest, ZdClosure) {
  LemmaReport r = VerifyZdClosure(MakeRing(4));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.cases_checked, 1u);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_EQ(VerifyZdClosure(MakeRing(9)).cases_checked, 4u);
  r = VerifyZdClosure(MakeRing(27));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.cases_checked, 64u);
  EXPECT_EQ(r.lemma_id, LemmaId::kZdClosure);
}

TEST(LemmaTest, UnitZdSum) {
  EXPECT_TRUE(VerifyUnitZdSum(MakeRing(4)).holds);
  const LemmaReport r = VerifyUnitZdSum(MakeRing(8));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.cases_checked, 12u);
  EXPECT_EQ(KindOf([] { VerifyUnitZdSum(MakeRing(6)); }), ErrorKind::kUnsupportedRing);
}

TEST(LemmaTest, CompositeRingsRejected) {
  const RingSpec z6 = MakeRing(6);
  EXPECT_EQ(KindOf([&] { VerifyZdClosure(z6); }), ErrorKind::kUnsupportedRing);
  EXPECT_EQ(KindOf([&] { VerifyAllLemmas(z6); }), ErrorKind::kUnsupportedRing);
  EXPECT_EQ(KindOf([&] { ZdTranslates(z6, 2); }), ErrorKind::kUnsupportedRing);
  EXPECT_EQ(KindOf([&] { UnitOrbit(z6, 1); }), ErrorKind::kUnsupportedRing);
  EXPECT_EQ(KindOf([&] { ClassifyPair(z6, 1, 1); }), ErrorKind::kUnsupportedRing);
}

TEST(LemmaTest, ZdTranslatesExamples) {
  EXPECT_THAT(ZdTranslates(MakeRing(4), 2), ElementsAre(0));
  EXPECT_THAT(ZdTranslates(MakeRing(9), 3), ElementsAre(6, 0));
  EXPECT_THAT(ZdTranslates(MakeRing(9), 6), ElementsAre(0, 3));
  EXPECT_EQ(KindOf([] { ZdTranslates(MakeRing(9), 2); }), ErrorKind::kWrongClass);
}

TEST(LemmaTest, UnitOrbitExamples) {
  EXPECT_THAT(UnitOrbit(MakeRing(4), 1), ElementsAre(2, 0));
  EXPECT_THAT(UnitOrbit(MakeRing(4), 3), ElementsAre(0, 2));
  const std::vector<Element> orbit = UnitOrbit(MakeRing(9), 2);
  EXPECT_EQ(std::count(orbit.begin(), orbit.end(), 3u), 1);
  EXPECT_EQ(std::count(orbit.begin(), orbit.end(), 6u), 1);
  EXPECT_EQ(std::count(orbit.begin(), orbit.end(), 0u), 1);
  EXPECT_EQ(KindOf([] { UnitOrbit(MakeRing(9), 3); }), ErrorKind::kWrongClass);
}

TEST(LemmaTest, ShapesOfTranslatesAndOrbits) {
  for (unsigned m : PrimePowersUpTo(243)) {
    const RingSpec r = MakeRing(m);
    const std::uint64_t q = m, p = *r.p();
    for (Element d : ZeroDivisors(r)) {
      const std::vector<Element> t = ZdTranslates(r, d);
      ASSERT_EQ(t.size(), q / p - 1);
      ASSERT_EQ(std::count(t.begin(), t.end(), 0u), 1);
      ASSERT_EQ(std::count(t.begin(), t.end(), d), 0);
    }
    for (Element u : Units(r)) {
      std::vector<Element> orbit = UnitOrbit(r, u);
      ASSERT_EQ(orbit.size(), q - q / p);
      // Drop the single zero; what remains is every zero divisor once plus
      // units only.
      auto zero = std::find(orbit.begin(), orbit.end(), 0u);
      ASSERT_NE(zero, orbit.end());
      orbit.erase(zero);
      std::map<Element, int> count;
      for (Element x : orbit) ++count[x];
      for (Element d : ZeroDivisors(r)) ASSERT_EQ(count[d], 1);
      for (const auto& [x, c] : count) {
        ASSERT_TRUE(x != 0 && (IsUnit(r, x) || c == 1));
      }
    }
  }
}

TEST(LemmaTest, AllSixHoldForPrimePowers) {
  for (unsigned m : PrimePowersUpTo(729)) {
    const std::vector<LemmaReport> reports = VerifyAllLemmas(MakeRing(m));
    ASSERT_EQ(reports.size(), 6u);
    const std::uint64_t units = oracle::Units(m).size();
    const std::uint64_t zds = oracle::ZeroDivisors(m).size();
    const std::uint64_t expected_cases[] = {zds * zds,     units * zds,
                                            zds * zds,     units * units,
                                            units * units, zds * zds};
    for (std::size_t i = 0; i < reports.size(); ++i) {
      EXPECT_EQ(reports[i].lemma_id, static_cast<LemmaId>(i));
      EXPECT_TRUE(reports[i].holds) << m << " " << LemmaName(reports[i].lemma_id);
      EXPECT_EQ(reports[i].cases_checked, expected_cases[i]) << m;
    }
  }
}

TEST(ClassifyPairTest, Examples) {
  const RingSpec z4 = MakeRing(4);
  EXPECT_EQ(ClassifyPair(z4, 2, 3),
            (PairDecomposition{PairType::kDStarCol, 3, {2, 1}}));
  EXPECT_EQ(ClassifyPair(z4, 0, 0),
            (PairDecomposition{PairType::kE2, 0, {0, 1}}));
  EXPECT_EQ(ClassifyPair(MakeRing(9), 3, 6),
            (PairDecomposition{PairType::kUnitCol, 3, {1, 2}}));
  EXPECT_EQ(ClassifyPair(z4, 3, 0),
            (PairDecomposition{PairType::kE1, 3, {1, 0}}));
  EXPECT_EQ(ClassifyPair(z4, 3, 2),
            (PairDecomposition{PairType::kDCol, 3, {1, 2}}));
  // k1 < k2 and k2 < k1 in Z_8.
  EXPECT_EQ(ClassifyPair(MakeRing(8), 6, 4),
            (PairDecomposition{PairType::kDCol, 6, {1, 6}}));
  EXPECT_EQ(ClassifyPair(MakeRing(8), 4, 6),
            (PairDecomposition{PairType::kDStarCol, 6, {6, 1}}));
}

TEST(ClassifyPairTest, ReconstructsEveryPairUpTo243) {
  for (unsigned m : PrimePowersUpTo(243)) {
    const RingSpec r = MakeRing(m);
    for (Element c1 = 0; c1 < m; ++c1) {
      for (Element c2 = 0; c2 < m; ++c2) {
        const PairDecomposition d = ClassifyPair(r, c1, c2);
        ASSERT_EQ(r.mul(d.scalar, d.canonical.first), c1);
        ASSERT_EQ(r.mul(d.scalar, d.canonical.second), c2);
        const auto [a, b] = d.canonical;
        switch (d.pair_type) {
          case PairType::kE1: ASSERT_EQ(d.canonical, (std::pair<Element, Element>{1, 0})); break;
          case PairType::kE2: ASSERT_EQ(d.canonical, (std::pair<Element, Element>{0, 1})); break;
          case PairType::kUnitCol: ASSERT_TRUE(a == 1 && IsUnit(r, b)); break;
          case PairType::kDCol: ASSERT_TRUE(a == 1 && IsZeroDivisor(r, b)); break;
          case PairType::kDStarCol: ASSERT_TRUE(b == 1 && IsZeroDivisor(r, a)); break;
        }
      }
    }
  }
}

TEST(ClassifyPairTest, UnitMultiplesKeepTheirCanonicalColumn) {
  const RingSpec r = MakeRing(27);
  const std::vector<std::pair<Element, Element>> canon = {
      {1, 0}, {0, 1}, {1, 5}, {1, 9}, {18, 1}};
  for (const auto& [a, b] : canon) {
    const PairType want = ClassifyPair(r, a, b).pair_type;
    for (Element u : Units(r)) {
      const PairDecomposition d = ClassifyPair(r, r.mul(u, a), r.mul(u, b));
      EXPECT_EQ(d.pair_type, want);
      EXPECT_EQ(d.scalar, u);
      EXPECT_EQ(d.canonical, (std::pair<Element, Element>{a, b}));
    }
  }
}

}  // namespace
}  // namespace minring
