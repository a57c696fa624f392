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
#include <iterator>
#include <string>
#include <vector>

#include "minring/errors.hpp"

namespace minring {

namespace {

bool ZeroOrZeroDivisor(const RingSpec& ring, Element x) {
  return Classify(ring, x) != ElementClass::kUnit;
}

void Fail(LemmaReport& report, std::vector<Element> witness) {
  if (!report.holds) return;  // keep the first failing case
  report.holds = false;
  report.witness = std::move(witness);
}

void RequireClass(const RingSpec& ring, Element x, ElementClass want) {
  const ElementClass got = Classify(ring, x);
  if (got != want) {
    throw Error(ErrorKind::kWrongClass,
                std::to_string(x) + " is a " + ElementClassName(got) +
                    ", expected a " + ElementClassName(want));
  }
}

}  // namespace

std::string_view LemmaName(LemmaId id) {
  switch (id) {
    case LemmaId::kZdClosure: return "ZdClosure";
    case LemmaId::kUnitZdSum: return "UnitZdSum";
    case LemmaId::kZdTranslates: return "ZdTranslates";
    case LemmaId::kUnitOrbit: return "UnitOrbit";
    case LemmaId::kUniqueNegPartner: return "UniqueNegPartner";
    case LemmaId::kUniqueAdditivePartner: return "UniqueAdditivePartner";
  }
  return "Unknown";
}

std::string_view PairTypeName(PairType t) {
  switch (t) {
    case PairType::kE1: return "E1";
    case PairType::kE2: return "E2";
    case PairType::kUnitCol: return "UnitCol";
    case PairType::kDCol: return "DCol";
    case PairType::kDStarCol: return "DStarCol";
  }
  return "Unknown";
}

LemmaReport VerifyZdClosure(const RingSpec& ring) {
  RequirePrimePower(ring, "zero-divisor closure check");
  LemmaReport report;
  report.lemma_id = LemmaId::kZdClosure;
  const std::vector<Element> zds = ZeroDivisors(ring);
  for (Element a : zds) {
    for (Element b : zds) {
      ++report.cases_checked;
      if (!ZeroOrZeroDivisor(ring, ring.add(a, b)) ||
          !ZeroOrZeroDivisor(ring, ring.mul(a, b))) {
        Fail(report, {a, b});
      }
    }
  }
  return report;
}

LemmaReport VerifyUnitZdSum(const RingSpec& ring) {
  RequirePrimePower(ring, "unit plus zero-divisor check");
  LemmaReport report;
  report.lemma_id = LemmaId::kUnitZdSum;
  const std::vector<Element> zds = ZeroDivisors(ring);
  for (Element u : Units(ring)) {
    for (Element d : zds) {
      ++report.cases_checked;
      if (!IsUnit(ring, ring.add(u, d))) Fail(report, {u, d});
    }
  }
  return report;
}

std::vector<Element> ZdTranslates(const RingSpec& ring, Element d) {
  RequirePrimePower(ring, "zero-divisor translates");
  RequireClass(ring, d, ElementClass::kZeroDivisor);
  std::vector<Element> out;
  for (Element dj : ZeroDivisors(ring)) out.push_back(ring.add(d, dj));
  return out;
}

std::vector<Element> UnitOrbit(const RingSpec& ring, Element u) {
  RequirePrimePower(ring, "unit orbit");
  RequireClass(ring, u, ElementClass::kUnit);
  std::vector<Element> out;
  for (Element uj : Units(ring)) out.push_back(ring.add(1, ring.mul(u, uj)));
  return out;
}

LemmaReport VerifyZdTranslates(const RingSpec& ring) {
  RequirePrimePower(ring, "zero-divisor translates check");
  LemmaReport report;
  report.lemma_id = LemmaId::kZdTranslates;
  const std::vector<Element> zds = ZeroDivisors(ring);
  for (Element d : zds) {
    std::vector<Element> got = ZdTranslates(ring, d);
    report.cases_checked += got.size();
    std::vector<Element> want;
    want.push_back(0);
    for (Element x : zds) {
      if (x != d) want.push_back(x);
    }
    std::sort(got.begin(), got.end());
    if (got != want) {
      // First element of the difference, or d itself on a length mismatch.
      std::vector<Element> diff;
      std::set_symmetric_difference(got.begin(), got.end(), want.begin(),
                                    want.end(), std::back_inserter(diff));
      Fail(report, {d, diff.empty() ? d : diff.front()});
    }
  }
  return report;
}

LemmaReport VerifyUnitOrbit(const RingSpec& ring) {
  RequirePrimePower(ring, "unit orbit check");
  LemmaReport report;
  report.lemma_id = LemmaId::kUnitOrbit;
  std::vector<std::uint32_t> count(ring.modulus());
  for (Element u : Units(ring)) {
    std::fill(count.begin(), count.end(), 0);
    const std::vector<Element> orbit = UnitOrbit(ring, u);
    report.cases_checked += orbit.size();
    for (Element x : orbit) ++count[x];
    for (Element x = 0; x < ring.modulus(); ++x) {
      if (!IsUnit(ring, x) && count[x] != 1) {
        Fail(report, {u, x});
        break;
      }
    }
  }
  return report;
}

LemmaReport VerifyUniqueNegPartner(const RingSpec& ring) {
  RequirePrimePower(ring, "negative unit partner check");
  LemmaReport report;
  report.lemma_id = LemmaId::kUniqueNegPartner;
  const std::vector<Element> units = Units(ring);
  for (Element u : units) {
    const Element partner = NegUnitPartner(ring, u);
    int solutions = 0;
    for (Element other : units) {
      ++report.cases_checked;
      if (ring.add(1, ring.mul(u, other)) != 0) continue;
      ++solutions;
      if (other != partner) Fail(report, {u, other});
    }
    if (solutions != 1) Fail(report, {u, partner});
  }
  return report;
}

LemmaReport VerifyUniqueAdditivePartner(const RingSpec& ring) {
  RequirePrimePower(ring, "additive partner check");
  LemmaReport report;
  report.lemma_id = LemmaId::kUniqueAdditivePartner;
  const std::vector<Element> zds = ZeroDivisors(ring);
  for (Element d : zds) {
    const Element partner = AdditivePartner(ring, d);
    int solutions = 0;
    for (Element other : zds) {
      ++report.cases_checked;
      if (ring.add(d, other) != 0) continue;
      ++solutions;
      if (other != partner) Fail(report, {d, other});
    }
    if (solutions != 1 || !IsZeroDivisor(ring, partner) ||
        AdditivePartner(ring, partner) != d) {
      Fail(report, {d, partner});
    }
  }
  return report;
}

std::vector<LemmaReport> VerifyAllLemmas(const RingSpec& ring) {
  RequirePrimePower(ring, "lemma verification");
  return {VerifyZdClosure(ring),        VerifyUnitZdSum(ring),
          VerifyZdTranslates(ring),     VerifyUnitOrbit(ring),
          VerifyUniqueNegPartner(ring), VerifyUniqueAdditivePartner(ring)};
}

PairDecomposition ClassifyPair(const RingSpec& ring, Element c1, Element c2) {
  RequirePrimePower(ring, "pair classification");
  RequireElement(ring, c1);
  RequireElement(ring, c2);
  if (c1 == 0) return {PairType::kE2, c2, {0, 1}};
  if (c2 == 0) return {PairType::kE1, c1, {1, 0}};

  const bool unit1 = IsUnit(ring, c1);
  const bool unit2 = IsUnit(ring, c2);
  if (unit1) {
    const Element ratio = ring.mul(c2, Inverse(ring, c1));
    return {unit2 ? PairType::kUnitCol : PairType::kDCol, c1, {1, ratio}};
  }
  if (unit2) {
    return {PairType::kDStarCol, c2, {ring.mul(c1, Inverse(ring, c2)), 1}};
  }

  // Both zero divisors: c_i = p^{k_i} * w_i.
  const Valuation v1 = ValuationOf(ring, c1);
  const Valuation v2 = ValuationOf(ring, c2);
  const Element p = static_cast<Element>(*ring.p());
  auto p_pow = [&](int e) {
    Element r = 1;
    for (int i = 0; i < e; ++i) r = ring.mul(r, p);
    return r;
  };
  if (v1.k < v2.k) {
    const Element second = ring.mul(
        p_pow(v2.k - v1.k), ring.mul(v2.unit_part, Inverse(ring, v1.unit_part)));
    return {PairType::kDCol, c1, {1, second}};
  }
  if (v2.k < v1.k) {
    const Element first = ring.mul(
        p_pow(v1.k - v2.k), ring.mul(v1.unit_part, Inverse(ring, v2.unit_part)));
    return {PairType::kDStarCol, c2, {first, 1}};
  }
  return {PairType::kUnitCol,
          c1,
          {1, ring.mul(v2.unit_part, Inverse(ring, v1.unit_part))}};
}

}  // namespace minring
