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

// Plain-text matrix format:
//
//   modulus 4
//   rows 2 cols 9
//   1 0 1 1 2 1 2 0 2
//   0 1 1 3 1 2 0 2 2
//
// FormatMatrix(ParseMatrix(s)) == s for any s produced by FormatMatrix.

#ifndef MINRING_MATRIX_IO_HPP_
#define MINRING_MATRIX_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "minring/codes.hpp"

namespace minring {

std::string FormatMatrix(const GeneratorMatrix& g);

// Throws kParse on malformed input.
GeneratorMatrix ParseMatrix(std::string_view text);

// "a,b;c,d;..." as used on the command line. Empty text gives no columns.
std::vector<Column> ParseColumnList(const RingSpec& ring, std::string_view text);

}  // namespace minring

#endif  // MINRING_MATRIX_IO_HPP_
