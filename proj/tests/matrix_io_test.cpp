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

#include <random>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "minring/construction.hpp"
#include "minring/errors.hpp"

namespace minring {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected minring::Error";
  return ErrorKind::kShape;
}

constexpr const char* kZ4Text =
    "modulus 4\n"
    "rows 2 cols 9\n"
    "1 0 1 1 2 1 2 0 2\n"
    "0 1 1 3 1 2 0 2 2\n";

TEST(MatrixIoTest, FormatsZ4Example) {
  EXPECT_EQ(FormatMatrix(DemoMatrix(Demo::kZ4Example)), kZ4Text);
}

TEST(MatrixIoTest, ParsesZ4Example) {
  const GeneratorMatrix g = ParseMatrix(kZ4Text);
  EXPECT_EQ(g, DemoMatrix(Demo::kZ4Example));
  // Tolerates CRLF and a missing final newline.
  EXPECT_EQ(ParseMatrix("modulus 4\r\nrows 2 cols 2\r\n1 0\r\n0 1"),
            GeneratorMatrix(MakeRing(4), {1, 0}, {0, 1}));
}

TEST(MatrixIoTest, RoundTripsBitExactly) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const unsigned m = 2 + rng() % 60;
    const std::size_t cols = rng() % 12;
    Vector r1(cols), r2(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      r1[i] = static_cast<Element>(rng() % m);
      r2[i] = static_cast<Element>(rng() % m);
    }
    const std::string text = FormatMatrix(GeneratorMatrix(MakeRing(m), r1, r2));
    ASSERT_EQ(FormatMatrix(ParseMatrix(text)), text);
  }
}

TEST(MatrixIoTest, RejectsMalformedInput) {
  const char* bad[] = {
      "",
      "modulus 4\n",
      "modulus x\nrows 2 cols 1\n1\n0\n",
      "modulus 1\nrows 2 cols 1\n0\n0\n",
      "mod 4\nrows 2 cols 1\n1\n0\n",
      "modulus 4\nrows 3 cols 1\n1\n0\n1\n",
      "modulus 4\nrows 2 cols 2\n1 0\n0\n",
      "modulus 4\nrows 2 cols 2\n1 0\n0 4\n",
      "modulus 4\nrows 2 cols 2\n1 0\n0 1\n1 1\n",
      "modulus 4\nrows 2 cols 2\n1 -1\n0 1\n",
  };
  for (const char* text : bad) {
    EXPECT_EQ(KindOf([&] { ParseMatrix(text); }), ErrorKind::kParse) << text;
  }
}

TEST(ColumnListTest, Parses) {
  const RingSpec z4 = MakeRing(4);
  EXPECT_THAT(ParseColumnList(z4, "2,0;0,2;2,2"),
              ElementsAre(Column{2, 0}, Column{0, 2}, Column{2, 2}));
  EXPECT_THAT(ParseColumnList(z4, " 1, 3 ; 2,1 "), ElementsAre(Column{1, 3}, Column{2, 1}));
  EXPECT_THAT(ParseColumnList(z4, ""), IsEmpty());
  EXPECT_EQ(KindOf([&] { ParseColumnList(z4, "1,4"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([&] { ParseColumnList(z4, "1"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([&] { ParseColumnList(z4, "1,2,3"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([&] { ParseColumnList(z4, "a,b"); }), ErrorKind::kParse);
}

}  // namespace
}  // namespace minring
