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

#include "minring/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "minring/errors.hpp"

namespace minring {

namespace {

[[noreturn]] void ParseError(const std::string& message) {
  throw Error(ErrorKind::kParse, "matrix text: " + message);
}

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::uint64_t ParseNumber(std::string_view tok, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::kParse,
                std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

std::string Join(const Vector& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(row[i]);
  }
  return s;
}

}  // namespace

std::string FormatMatrix(const GeneratorMatrix& g) {
  return "modulus " + std::to_string(g.ring().modulus()) + "\nrows 2 cols " +
         std::to_string(g.cols()) + "\n" + Join(g.row1()) + "\n" +
         Join(g.row2()) + "\n";
}

GeneratorMatrix ParseMatrix(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // Blank lines past the two rows are ignored; a zero-column matrix has
  // blank rows of its own.
  while (lines.size() > 4 && Tokens(lines.back()).empty()) lines.pop_back();
  if (lines.size() < 2) ParseError("expected header lines");

  const auto head = Tokens(lines[0]);
  if (head.size() != 2 || head[0] != "modulus") {
    ParseError("line 1 must be 'modulus M'");
  }
  const RingSpec ring = [&] {
    try {
      return MakeRing(ParseNumber(head[1], "modulus"));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kParse) throw;
      ParseError(e.what());
    }
  }();

  const auto shape = Tokens(lines[1]);
  if (shape.size() != 4 || shape[0] != "rows" || shape[2] != "cols") {
    ParseError("line 2 must be 'rows 2 cols m'");
  }
  if (ParseNumber(shape[1], "row count") != 2) ParseError("only 2 rows supported");
  const std::uint64_t cols = ParseNumber(shape[3], "column count");

  if (cols == 0) lines.resize(std::max<std::size_t>(lines.size(), 4));
  if (lines.size() != 4) {
    ParseError("expected 2 matrix rows, got " + std::to_string(lines.size() - 2));
  }
  Vector rows[2];
  for (int r = 0; r < 2; ++r) {
    const auto toks = Tokens(lines[2 + r]);
    if (toks.size() != cols) {
      ParseError("row " + std::to_string(r + 1) + " has " +
                 std::to_string(toks.size()) + " entries, expected " +
                 std::to_string(cols));
    }
    for (const std::string& tok : toks) {
      const std::uint64_t x = ParseNumber(tok, "entry");
      if (!ring.contains(x)) {
        ParseError("entry " + tok + " is not a residue mod " +
                   std::to_string(ring.modulus()));
      }
      rows[r].push_back(static_cast<Element>(x));
    }
  }
  return GeneratorMatrix(ring, std::move(rows[0]), std::move(rows[1]));
}

std::vector<Column> ParseColumnList(const RingSpec& ring, std::string_view text) {
  std::vector<Column> out;
  std::string spec(text);
  std::erase_if(spec, [](char c) { return c == ' ' || c == '\t'; });
  if (spec.empty()) return out;
  std::istringstream in(spec);
  for (std::string item; std::getline(in, item, ';');) {
    const auto comma = item.find(',');
    if (comma == std::string::npos || item.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorKind::kParse, "column '" + item + "' must be 'a,b'");
    }
    const std::uint64_t a = ParseNumber(std::string_view(item).substr(0, comma), "column entry");
    const std::uint64_t b = ParseNumber(std::string_view(item).substr(comma + 1), "column entry");
    if (!ring.contains(a) || !ring.contains(b)) {
      throw Error(ErrorKind::kParse, "column '" + item + "' has entries outside Z_" +
                                         std::to_string(ring.modulus()));
    }
    out.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
  }
  return out;
}

}  // namespace minring
