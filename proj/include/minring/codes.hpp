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

// Two-dimensional linear codes over Z_M given by a 2 x m generator matrix:
// codeword enumeration, supports, the cover relation and a brute-force
// minimality engine.
//
// A nonzero codeword u is minimal when every nonzero codeword v with
// Supp(v) a subset of Supp(u) is a scalar multiple a*u. A code is minimal
// when all of its nonzero codewords are. Supports are reported 1-based.

#ifndef MINRING_CODES_HPP_
#define MINRING_CODES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "minring/ring.hpp"

namespace minring {

using Vector = std::vector<Element>;
using Column = std::pair<Element, Element>;

// Default budget for M^2 * m component evaluations.
inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

enum class Block { kI2, kU, kDStar, kD, kA };

std::string_view BlockName(Block b);

// Columns [begin, end) of a canonically built matrix, 0-based.
struct BlockSpan {
  Block block;
  std::size_t begin;
  std::size_t end;

  friend bool operator==(const BlockSpan&, const BlockSpan&) = default;
};

class GeneratorMatrix {
 public:
  // Throws kShape when the rows differ in length or hold non-residues, or
  // when a layout does not partition the columns.
  GeneratorMatrix(const RingSpec& ring, Vector row1, Vector row2,
                  std::optional<std::vector<BlockSpan>> layout = std::nullopt);

  static GeneratorMatrix FromColumns(
      const RingSpec& ring, std::span<const Column> columns,
      std::optional<std::vector<BlockSpan>> layout = std::nullopt);

  const RingSpec& ring() const { return ring_; }
  std::size_t cols() const { return row1_.size(); }
  const Vector& row1() const { return row1_; }
  const Vector& row2() const { return row2_; }
  Column column(std::size_t i) const { return {row1_.at(i), row2_.at(i)}; }
  std::vector<Column> columns() const;
  const std::optional<std::vector<BlockSpan>>& block_layout() const {
    return layout_;
  }

  // c1 * row1 + c2 * row2.
  Vector Combine(Element c1, Element c2) const;

  friend bool operator==(const GeneratorMatrix&,
                         const GeneratorMatrix&) = default;

 private:
  RingSpec ring_;
  Vector row1_;
  Vector row2_;
  std::optional<std::vector<BlockSpan>> layout_;
};

struct Codeword {
  Vector components;
  std::vector<std::size_t> support;  // 1-based, ascending
  // Every (c1, c2) with c1*v1 + c2*v2 == components, lexicographic.
  std::vector<Column> coefficients;

  std::size_t weight() const { return support.size(); }
  bool is_zero() const { return support.empty(); }
};

class LinearCode {
 public:
  LinearCode(GeneratorMatrix generator, std::vector<Codeword> codewords);

  const GeneratorMatrix& generator() const { return generator_; }
  const RingSpec& ring() const { return generator_.ring(); }
  // Distinct codewords in lexicographic order of their components.
  const std::vector<Codeword>& codewords() const { return codewords_; }
  std::size_t cardinality() const { return codewords_.size(); }

  std::optional<std::size_t> IndexOf(std::span<const Element> v) const;
  bool Contains(std::span<const Element> v) const {
    return IndexOf(v).has_value();
  }

 private:
  GeneratorMatrix generator_;
  std::vector<Codeword> codewords_;
};

std::vector<std::size_t> Support(std::span<const Element> v);
// Supp(v) is a subset of Supp(u). Throws kShape on a length mismatch.
bool Covers(std::span<const Element> u, std::span<const Element> v);
std::size_t HammingWeight(std::span<const Element> v);
std::size_t HammingDistance(std::span<const Element> x,
                            std::span<const Element> y);

Vector ScaleVector(const RingSpec& ring, Element a, std::span<const Element> v);

// Throws kTooLarge when M^2 * m exceeds cap.
LinearCode EnumerateCode(const GeneratorMatrix& g,
                         std::uint64_t cap = kDefaultEnumerationCap);

struct CoverWitness {
  Vector covered;
  Vector coverer;

  friend bool operator==(const CoverWitness&, const CoverWitness&) = default;
};

struct CodewordVerdict {
  bool minimal;
  // A nonzero codeword covered by u that is not a multiple of u.
  std::optional<Vector> witness;
};

// Throws kMembership when u is not in the code, kZeroCodeword for u == 0.
CodewordVerdict IsMinimalCodeword(const LinearCode& code,
                                  std::span<const Element> u);

struct ScanOptions {
  // 0 picks std::thread::hardware_concurrency(). The result does not depend
  // on this value.
  unsigned workers = 0;
};

struct MinimalityReport {
  bool minimal = true;
  // Ordered by coverer, then covered, both lexicographic.
  std::vector<CoverWitness> witnesses;
  std::size_t w_min = 0;
  std::size_t w_max = 0;
  // w_min / w_max > (q - 1) / q with q = M. Only a sufficient condition,
  // and only for fields; informational otherwise.
  bool ab_ratio_ok = false;
  // Ordered (coverer, covered) pairs of nonzero codewords examined.
  std::uint64_t pairs_checked = 0;
};

MinimalityReport IsMinimalCode(const LinearCode& code, ScanOptions options = {});

bool AshikhminBargHolds(std::size_t w_min, std::size_t w_max, std::uint64_t q);

struct OneDimVerdict {
  bool minimal;
  std::optional<CoverWitness> witness;
};

// Brute force over the cyclic module {a*v : a in R}. Throws kZeroCodeword
// for v == 0 and kTooLarge when M * m exceeds cap.
OneDimVerdict OneDimMinimalCheck(const RingSpec& ring,
                                 std::span<const Element> v,
                                 std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace minring

#endif  // MINRING_CODES_HPP_
