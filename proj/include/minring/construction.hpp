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

// Generator matrices G = (I2 | U | D* | D | A) over Z_{p^n}.
//
//   I2 = (1,0), (0,1)
//   U  = (1,u)  for every unit u, ascending
//   D* = (d,1)  for every zero divisor d, ascending
//   D  = (1,d)  for every zero divisor d, ascending
//   A  = arbitrary extra columns
//
// The first p^n + p^{n-1} columns are the canonical prefix. The code they
// generate is minimal whatever A is, stays minimal when each prefix column
// is scaled by a unit, and stops being minimal once any one prefix column
// (together with all of its unit multiples) is left out.

#ifndef MINRING_CONSTRUCTION_HPP_
#define MINRING_CONSTRUCTION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minring/codes.hpp"
#include "minring/ring.hpp"
#include "minring/structure.hpp"

namespace minring {

// One prefix column up to unit scaling: (1,0), (0,1), (1,u), (d,1), (1,d).
struct ColumnKind {
  PairType type;
  Element parameter = 0;  // u or d; unused for E1 and E2

  static ColumnKind E1() { return {PairType::kE1, 0}; }
  static ColumnKind E2() { return {PairType::kE2, 0}; }
  static ColumnKind Unit(Element u) { return {PairType::kUnitCol, u}; }
  static ColumnKind DStar(Element d) { return {PairType::kDStarCol, d}; }
  static ColumnKind D(Element d) { return {PairType::kDCol, d}; }

  Column column() const;
  std::string ToString() const;

  friend bool operator==(const ColumnKind&, const ColumnKind&) = default;
};

// Every prefix column kind of the ring, in prefix order.
std::vector<ColumnKind> AllColumnKinds(const RingSpec& ring);

// Unit scalars for the canonical prefix, one per column.
struct ScalingVector {
  std::vector<Element> scalars;
};

struct CanonicalBlocks {
  std::vector<Column> units;   // (1, u_i)
  std::vector<Column> dstar;   // (d_j, 1)
  std::vector<Column> d;       // (1, d_j)
};

CanonicalBlocks MakeCanonicalBlocks(const RingSpec& ring);

// p^n + p^{n-1}.
std::size_t CanonicalPrefixLength(const RingSpec& ring);

GeneratorMatrix BuildG(const RingSpec& ring, std::span<const Column> extra = {});

// Column i of the prefix is multiplied by scalars[i]; A is left alone.
// Throws kShape on a length mismatch and kWrongClass on a non-unit.
GeneratorMatrix BuildGScaled(const RingSpec& ring, const ScalingVector& scaling,
                             std::span<const Column> extra = {});

// The prefix without the omitted column. Throws kOmissionViolated when an
// extra column is a unit multiple of it.
GeneratorMatrix BuildGOmitted(const RingSpec& ring, ColumnKind omit,
                              std::span<const Column> extra = {});

// Multiplies column i by scalars[i] for i < scalars.size(), keeping the
// layout. With inverse scalars this is G' * P.
GeneratorMatrix ScaleColumns(const GeneratorMatrix& g,
                             std::span<const Element> scalars);

// New column i is old column permutation[i]; entries are 1-based. The block
// layout is dropped. Throws kShape unless permutation is a bijection.
GeneratorMatrix ShuffleColumns(const GeneratorMatrix& g,
                               std::span<const std::size_t> permutation);

// Uniform columns over R x R from a seeded mt19937_64.
std::vector<Column> RandomColumns(const RingSpec& ring, std::size_t count,
                                  std::uint64_t seed);

enum class Demo { kZ4Example, kZ6Counterexample, kZ3Conclusion };

GeneratorMatrix DemoMatrix(Demo name);

}  // namespace minring

#endif  // MINRING_CONSTRUCTION_HPP_
