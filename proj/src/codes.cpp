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

#include "minring/codes.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "minring/errors.hpp"

namespace minring {

namespace {

// Coverer rows handed to each worker are contiguous; below this many
// codewords the scan stays on the calling thread.
constexpr std::size_t kParallelThreshold = 1024;

void RequireSameLength(std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kShape, "vector lengths differ: " +
                                       std::to_string(a.size()) + " vs " +
                                       std::to_string(b.size()));
  }
}

std::string FormatVector(std::span<const Element> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

class SupportMask {
 public:
  explicit SupportMask(std::span<const Element> v)
      : words_((v.size() + 63) / 64) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  bool SubsetOf(const SupportMask& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::optional<std::size_t> FindSorted(const std::vector<Vector>& words,
                                      std::span<const Element> v) {
  auto it = std::lower_bound(
      words.begin(), words.end(), v, [](const Vector& a, std::span<const Element> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
  if (it == words.end() || !std::equal(it->begin(), it->end(), v.begin(), v.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - words.begin());
}

struct ScanResult {
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;  // (covered, coverer)
  std::uint64_t pairs_checked = 0;
};

// All-pairs cover scan over a sorted set of distinct vectors that is closed
// under scalar multiplication. Coverers are taken from [begin, end).
class CoverScanner {
 public:
  CoverScanner(const RingSpec& ring, const std::vector<Vector>& words)
      : ring_(ring), words_(words) {
    masks_.reserve(words.size());
    for (const Vector& w : words) {
      masks_.emplace_back(w);
      nonzero_.push_back(std::any_of(w.begin(), w.end(),
                                     [](Element x) { return x != 0; }));
    }
  }

  std::size_t size() const { return words_.size(); }

  // With stop_at_first the scan ends at the first witness found.
  ScanResult Scan(std::size_t begin, std::size_t end, bool stop_at_first) const {
    ScanResult result;
    std::vector<char> is_multiple(words_.size(), 0);
    std::vector<std::size_t> marked;
    for (std::size_t i = begin; i < end; ++i) {
      if (!nonzero_[i]) continue;
      marked.clear();
      for (std::uint64_t a = 0; a < ring_.modulus(); ++a) {
        const Vector m = ScaleVector(ring_, static_cast<Element>(a), words_[i]);
        if (auto idx = FindSorted(words_, m)) {
          is_multiple[*idx] = 1;
          marked.push_back(*idx);
        }
      }
      for (std::size_t j = 0; j < words_.size(); ++j) {
        if (!nonzero_[j]) continue;
        ++result.pairs_checked;
        if (is_multiple[j] || !masks_[j].SubsetOf(masks_[i])) continue;
        result.witnesses.emplace_back(j, i);
        if (stop_at_first) break;
      }
      for (std::size_t idx : marked) is_multiple[idx] = 0;
      if (stop_at_first && !result.witnesses.empty()) break;
    }
    return result;
  }

  ScanResult ScanAll(unsigned workers) const {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || words_.size() < kParallelThreshold) {
      return Scan(0, words_.size(), false);
    }
    const std::size_t n = words_.size();
    std::vector<ScanResult> parts(workers);
    {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = n * w / workers;
        const std::size_t hi = n * (w + 1) / workers;
        threads.emplace_back([this, &parts, w, lo, hi] {
          parts[w] = Scan(lo, hi, false);
        });
      }
    }
    ScanResult merged;
    for (ScanResult& part : parts) {
      merged.pairs_checked += part.pairs_checked;
      merged.witnesses.insert(merged.witnesses.end(), part.witnesses.begin(),
                              part.witnesses.end());
    }
    return merged;
  }

 private:
  const RingSpec& ring_;
  const std::vector<Vector>& words_;
  std::vector<SupportMask> masks_;
  std::vector<char> nonzero_;
};

std::vector<Vector> ComponentsOf(const LinearCode& code) {
  std::vector<Vector> words;
  words.reserve(code.cardinality());
  for (const Codeword& c : code.codewords()) words.push_back(c.components);
  return words;
}

}  // namespace

std::string_view BlockName(Block b) {
  switch (b) {
    case Block::kI2: return "I2";
    case Block::kU: return "U";
    case Block::kDStar: return "DStar";
    case Block::kD: return "D";
    case Block::kA: return "A";
  }
  return "?";
}

GeneratorMatrix::GeneratorMatrix(const RingSpec& ring, Vector row1, Vector row2,
                                 std::optional<std::vector<BlockSpan>> layout)
    : ring_(ring),
      row1_(std::move(row1)),
      row2_(std::move(row2)),
      layout_(std::move(layout)) {
  RequireSameLength(row1_, row2_);
  for (const Vector* row : {&row1_, &row2_}) {
    for (Element x : *row) RequireElement(ring_, x);
  }
  if (layout_) {
    std::size_t next = 0;
    for (const BlockSpan& span : *layout_) {
      if (span.begin != next || span.end < span.begin) {
        throw Error(ErrorKind::kShape, "block layout does not partition columns");
      }
      next = span.end;
    }
    if (next != cols()) {
      throw Error(ErrorKind::kShape, "block layout does not cover all columns");
    }
  }
}

GeneratorMatrix GeneratorMatrix::FromColumns(
    const RingSpec& ring, std::span<const Column> columns,
    std::optional<std::vector<BlockSpan>> layout) {
  Vector r1, r2;
  r1.reserve(columns.size());
  r2.reserve(columns.size());
  for (const auto& [a, b] : columns) {
    r1.push_back(a);
    r2.push_back(b);
  }
  return GeneratorMatrix(ring, std::move(r1), std::move(r2), std::move(layout));
}

std::vector<Column> GeneratorMatrix::columns() const {
  std::vector<Column> out;
  out.reserve(cols());
  for (std::size_t i = 0; i < cols(); ++i) out.emplace_back(row1_[i], row2_[i]);
  return out;
}

Vector GeneratorMatrix::Combine(Element c1, Element c2) const {
  RequireElement(ring_, c1);
  RequireElement(ring_, c2);
  Vector out(cols());
  for (std::size_t i = 0; i < cols(); ++i) {
    out[i] = ring_.add(ring_.mul(c1, row1_[i]), ring_.mul(c2, row2_[i]));
  }
  return out;
}

LinearCode::LinearCode(GeneratorMatrix generator, std::vector<Codeword> codewords)
    : generator_(std::move(generator)), codewords_(std::move(codewords)) {}

std::optional<std::size_t> LinearCode::IndexOf(std::span<const Element> v) const {
  auto it = std::lower_bound(
      codewords_.begin(), codewords_.end(), v,
      [](const Codeword& c, std::span<const Element> key) {
        return std::lexicographical_compare(c.components.begin(),
                                            c.components.end(), key.begin(),
                                            key.end());
      });
  if (it == codewords_.end() ||
      !std::equal(it->components.begin(), it->components.end(), v.begin(),
                  v.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - codewords_.begin());
}

std::vector<std::size_t> Support(std::span<const Element> v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.push_back(i + 1);
  }
  return out;
}

bool Covers(std::span<const Element> u, std::span<const Element> v) {
  RequireSameLength(u, v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && u[i] == 0) return false;
  }
  return true;
}

std::size_t HammingWeight(std::span<const Element> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](Element x) { return x != 0; }));
}

std::size_t HammingDistance(std::span<const Element> x,
                            std::span<const Element> y) {
  RequireSameLength(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

Vector ScaleVector(const RingSpec& ring, Element a, std::span<const Element> v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ring.mul(a, v[i]);
  return out;
}

LinearCode EnumerateCode(const GeneratorMatrix& g, std::uint64_t cap) {
  const std::uint64_t m = g.ring().modulus();
  const std::uint64_t budget = m * m * g.cols();
  if (budget > cap) {
    throw Error(ErrorKind::kTooLarge,
                "enumeration needs " + std::to_string(budget) +
                    " component evaluations, cap is " + std::to_string(cap));
  }
  std::map<Vector, std::vector<Column>> grouped;
  for (std::uint64_t c1 = 0; c1 < m; ++c1) {
    for (std::uint64_t c2 = 0; c2 < m; ++c2) {
      const auto e1 = static_cast<Element>(c1);
      const auto e2 = static_cast<Element>(c2);
      grouped[g.Combine(e1, e2)].emplace_back(e1, e2);
    }
  }
  std::vector<Codeword> words;
  words.reserve(grouped.size());
  for (auto& [components, coefficients] : grouped) {
    Codeword c;
    c.support = Support(components);
    c.components = components;
    c.coefficients = std::move(coefficients);
    words.push_back(std::move(c));
  }
  return LinearCode(g, std::move(words));
}

CodewordVerdict IsMinimalCodeword(const LinearCode& code,
                                  std::span<const Element> u) {
  const auto index = code.IndexOf(u);
  if (!index) {
    throw Error(ErrorKind::kMembership, FormatVector(u) + " is not a codeword");
  }
  if (code.codewords()[*index].is_zero()) {
    throw Error(ErrorKind::kZeroCodeword,
                "minimality is not defined for the zero codeword");
  }
  const std::vector<Vector> words = ComponentsOf(code);
  const CoverScanner scanner(code.ring(), words);
  const ScanResult r = scanner.Scan(*index, *index + 1, /*stop_at_first=*/true);
  if (r.witnesses.empty()) return {true, std::nullopt};
  return {false, words[r.witnesses.front().first]};
}

bool AshikhminBargHolds(std::size_t w_min, std::size_t w_max, std::uint64_t q) {
  if (w_max == 0) return false;
  return std::uint64_t{w_min} * q > std::uint64_t{w_max} * (q - 1);
}

MinimalityReport IsMinimalCode(const LinearCode& code, ScanOptions options) {
  MinimalityReport report;
  const std::vector<Vector> words = ComponentsOf(code);
  const CoverScanner scanner(code.ring(), words);
  const ScanResult r = scanner.ScanAll(options.workers);
  report.pairs_checked = r.pairs_checked;
  report.witnesses.reserve(r.witnesses.size());
  for (const auto& [covered, coverer] : r.witnesses) {
    report.witnesses.push_back({words[covered], words[coverer]});
  }
  report.minimal = report.witnesses.empty();

  bool any = false;
  for (const Codeword& c : code.codewords()) {
    if (c.is_zero()) continue;
    report.w_min = any ? std::min(report.w_min, c.weight()) : c.weight();
    report.w_max = any ? std::max(report.w_max, c.weight()) : c.weight();
    any = true;
  }
  report.ab_ratio_ok =
      AshikhminBargHolds(report.w_min, report.w_max, code.ring().modulus());
  return report;
}

OneDimVerdict OneDimMinimalCheck(const RingSpec& ring,
                                 std::span<const Element> v, std::uint64_t cap) {
  for (Element x : v) RequireElement(ring, x);
  if (HammingWeight(v) == 0) {
    throw Error(ErrorKind::kZeroCodeword, "the generating vector is zero");
  }
  const std::uint64_t budget = ring.modulus() * v.size();
  if (budget > cap) {
    throw Error(ErrorKind::kTooLarge,
                "cyclic module needs " + std::to_string(budget) +
                    " component evaluations, cap is " + std::to_string(cap));
  }
  std::vector<Vector> words;
  for (std::uint64_t a = 0; a < ring.modulus(); ++a) {
    words.push_back(ScaleVector(ring, static_cast<Element>(a), v));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  const CoverScanner scanner(ring, words);
  const ScanResult r = scanner.Scan(0, words.size(), /*stop_at_first=*/true);
  if (r.witnesses.empty()) return {true, std::nullopt};
  const auto& [covered, coverer] = r.witnesses.front();
  return {false, CoverWitness{words[covered], words[coverer]}};
}

}  // namespace minring
