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

#include "minring/construction.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "minring/errors.hpp"

namespace minring {

namespace {

constexpr const char* kConstruction = "construction";

void RequireClass(const RingSpec& ring, Element x, ElementClass want,
                  const std::string& what) {
  const ElementClass got = Classify(ring, x);
  if (got != want) {
    throw Error(ErrorKind::kWrongClass,
                what + " " + std::to_string(x) + " is a " +
                    ElementClassName(got) + ", expected a " +
                    ElementClassName(want));
  }
}

std::string FormatColumn(const Column& c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

// Appends a block, recording its span even when empty.
void AppendBlock(Block block, const std::vector<Column>& cols,
                 std::vector<Column>& out, std::vector<BlockSpan>& layout) {
  const std::size_t begin = out.size();
  out.insert(out.end(), cols.begin(), cols.end());
  layout.push_back({block, begin, out.size()});
}

bool MatchesKind(const RingSpec& ring, const Column& c, const ColumnKind& kind) {
  if (c.first == 0 && c.second == 0) return false;
  const PairDecomposition dec = ClassifyPair(ring, c.first, c.second);
  if (dec.pair_type != kind.type || !IsUnit(ring, dec.scalar)) return false;
  switch (kind.type) {
    case PairType::kE1:
    case PairType::kE2:
      return true;
    case PairType::kUnitCol:
    case PairType::kDCol:
      return dec.canonical.second == kind.parameter;
    case PairType::kDStarCol:
      return dec.canonical.first == kind.parameter;
  }
  return false;
}

GeneratorMatrix Assemble(const RingSpec& ring, std::vector<Column> i2,
                         CanonicalBlocks blocks, std::span<const Column> extra) {
  for (const Column& c : extra) {
    RequireElement(ring, c.first);
    RequireElement(ring, c.second);
  }
  std::vector<Column> cols;
  std::vector<BlockSpan> layout;
  AppendBlock(Block::kI2, i2, cols, layout);
  AppendBlock(Block::kU, blocks.units, cols, layout);
  AppendBlock(Block::kDStar, blocks.dstar, cols, layout);
  AppendBlock(Block::kD, blocks.d, cols, layout);
  AppendBlock(Block::kA, {extra.begin(), extra.end()}, cols, layout);
  return GeneratorMatrix::FromColumns(ring, cols, std::move(layout));
}

}  // namespace

Column ColumnKind::column() const {
  switch (type) {
    case PairType::kE1: return {1, 0};
    case PairType::kE2: return {0, 1};
    case PairType::kUnitCol: return {1, parameter};
    case PairType::kDCol: return {1, parameter};
    case PairType::kDStarCol: return {parameter, 1};
  }
  return {0, 0};
}

std::string ColumnKind::ToString() const {
  std::string s(PairTypeName(type));
  if (type != PairType::kE1 && type != PairType::kE2) {
    s += "(" + std::to_string(parameter) + ")";
  }
  return s;
}

std::vector<ColumnKind> AllColumnKinds(const RingSpec& ring) {
  RequirePrimePower(ring, kConstruction);
  std::vector<ColumnKind> kinds{ColumnKind::E1(), ColumnKind::E2()};
  for (Element u : Units(ring)) kinds.push_back(ColumnKind::Unit(u));
  const std::vector<Element> zds = ZeroDivisors(ring);
  for (Element d : zds) kinds.push_back(ColumnKind::DStar(d));
  for (Element d : zds) kinds.push_back(ColumnKind::D(d));
  return kinds;
}

CanonicalBlocks MakeCanonicalBlocks(const RingSpec& ring) {
  RequirePrimePower(ring, kConstruction);
  CanonicalBlocks blocks;
  for (Element u : Units(ring)) blocks.units.emplace_back(1, u);
  for (Element d : ZeroDivisors(ring)) {
    blocks.dstar.emplace_back(d, 1);
    blocks.d.emplace_back(1, d);
  }
  return blocks;
}

std::size_t CanonicalPrefixLength(const RingSpec& ring) {
  RequirePrimePower(ring, kConstruction);
  const std::uint64_t q = ring.modulus();
  return static_cast<std::size_t>(q + q / *ring.p());
}

GeneratorMatrix BuildG(const RingSpec& ring, std::span<const Column> extra) {
  return Assemble(ring, {{1, 0}, {0, 1}}, MakeCanonicalBlocks(ring), extra);
}

GeneratorMatrix BuildGScaled(const RingSpec& ring, const ScalingVector& scaling,
                             std::span<const Column> extra) {
  const std::size_t prefix = CanonicalPrefixLength(ring);
  if (scaling.scalars.size() != prefix) {
    throw Error(ErrorKind::kShape,
                "scaling vector needs " + std::to_string(prefix) +
                    " entries, got " + std::to_string(scaling.scalars.size()));
  }
  for (Element s : scaling.scalars) {
    RequireClass(ring, s, ElementClass::kUnit, "scaling entry");
  }
  return ScaleColumns(BuildG(ring, extra), scaling.scalars);
}

GeneratorMatrix BuildGOmitted(const RingSpec& ring, ColumnKind omit,
                              std::span<const Column> extra) {
  RequirePrimePower(ring, kConstruction);
  switch (omit.type) {
    case PairType::kUnitCol:
      RequireClass(ring, omit.parameter, ElementClass::kUnit,
                   "omitted column parameter");
      break;
    case PairType::kDCol:
    case PairType::kDStarCol:
      RequireClass(ring, omit.parameter, ElementClass::kZeroDivisor,
                   "omitted column parameter");
      break;
    default:
      break;
  }
  for (const Column& c : extra) {
    RequireElement(ring, c.first);
    RequireElement(ring, c.second);
    if (MatchesKind(ring, c, omit)) {
      throw Error(ErrorKind::kOmissionViolated,
                  "extra column " + FormatColumn(c) +
                      " is a unit multiple of the omitted column " +
                      omit.ToString());
    }
  }

  const Column gone = omit.column();
  auto drop = [&](std::vector<Column>& cols) {
    std::erase(cols, gone);
  };
  std::vector<Column> i2{{1, 0}, {0, 1}};
  CanonicalBlocks blocks = MakeCanonicalBlocks(ring);
  switch (omit.type) {
    case PairType::kE1:
    case PairType::kE2: drop(i2); break;
    case PairType::kUnitCol: drop(blocks.units); break;
    case PairType::kDStarCol: drop(blocks.dstar); break;
    case PairType::kDCol: drop(blocks.d); break;
  }
  return Assemble(ring, std::move(i2), std::move(blocks), extra);
}

GeneratorMatrix ScaleColumns(const GeneratorMatrix& g,
                             std::span<const Element> scalars) {
  if (scalars.size() > g.cols()) {
    throw Error(ErrorKind::kShape, "more scalars than columns");
  }
  Vector r1 = g.row1(), r2 = g.row2();
  const RingSpec& ring = g.ring();
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    RequireElement(ring, scalars[i]);
    r1[i] = ring.mul(scalars[i], r1[i]);
    r2[i] = ring.mul(scalars[i], r2[i]);
  }
  return GeneratorMatrix(ring, std::move(r1), std::move(r2), g.block_layout());
}

GeneratorMatrix ShuffleColumns(const GeneratorMatrix& g,
                               std::span<const std::size_t> permutation) {
  const std::size_t m = g.cols();
  if (permutation.size() != m) {
    throw Error(ErrorKind::kShape,
                "permutation has " + std::to_string(permutation.size()) +
                    " entries for " + std::to_string(m) + " columns");
  }
  std::vector<bool> seen(m, false);
  Vector r1(m), r2(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t src = permutation[i];
    if (src < 1 || src > m || seen[src - 1]) {
      throw Error(ErrorKind::kShape, "permutation is not a bijection on [1, " +
                                         std::to_string(m) + "]");
    }
    seen[src - 1] = true;
    r1[i] = g.row1()[src - 1];
    r2[i] = g.row2()[src - 1];
  }
  return GeneratorMatrix(g.ring(), std::move(r1), std::move(r2));
}

std::vector<Column> RandomColumns(const RingSpec& ring, std::size_t count,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, ring.modulus() - 1);
  std::vector<Column> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto a = static_cast<Element>(dist(rng));
    const auto b = static_cast<Element>(dist(rng));
    out.emplace_back(a, b);
  }
  return out;
}

GeneratorMatrix DemoMatrix(Demo name) {
  switch (name) {
    case Demo::kZ4Example:
      return GeneratorMatrix(MakeRing(4), {1, 0, 1, 1, 2, 1, 2, 0, 2},
                             {0, 1, 1, 3, 1, 2, 0, 2, 2});
    case Demo::kZ6Counterexample:
      return GeneratorMatrix(MakeRing(6), {1, 0, 1, 1, 1, 1, 1, 2, 3, 4},
                             {0, 1, 1, 5, 2, 3, 4, 1, 1, 1});
    case Demo::kZ3Conclusion:
      return GeneratorMatrix(MakeRing(3), {1, 0, 1, 1, 1, 1},
                             {0, 1, 1, 2, 2, 2});
  }
  throw Error(ErrorKind::kShape, "unknown demo");
}

}  // namespace minring
