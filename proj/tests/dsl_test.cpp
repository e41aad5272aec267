// Copyright 2026 The Supergeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "supergeom/dsl.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace supergeom {
namespace {

using testing::Random;

std::string Fixture(const std::string& name) {
  std::ifstream in(std::string(SUPERGEOM_TEST_DATA_DIR) + "/fixtures/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const ParseError CatchParse(std::string_view text) {
  try {
    ParseSource(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return ParseError(ErrorKind::kParseError, 0, 0, "");
}

TEST(DslTest, Example1) {
  const auto src = ParseSource("evens x y\nodds xi eta\nideal xi*eta\npoint 0 0\n");
  auto t = VarTable::Make({"x", "y"}, {"xi", "eta"});
  EXPECT_EQ(src.presentation,
            Presentation::Make(t, std::vector{SuperPolynomial::Var(t, "xi") *
                                              SuperPolynomial::Var(t, "eta")}));
  ASSERT_TRUE(src.point);
  EXPECT_EQ(*src.point, ClosedPoint::Origin(2));
  EXPECT_EQ(ParseSource(Fixture("example1.sv")).presentation, src.presentation);
}

TEST(DslTest, NormalizesAtParseTime) {
  const auto src = ParseSource("evens x\nodds xi eta\nideal eta*xi\n");
  ASSERT_EQ(src.presentation.even_gens.size(), 1u);
  EXPECT_EQ(src.presentation.even_gens[0].ToString(), "-xi*eta");
  EXPECT_FALSE(src.point);
}

TEST(DslTest, ExpressionSyntax) {
  const auto src = ParseSource(
      "evens x y   # comment\n"
      "odds xi\n"
      "ideal (x - 1)^2 + 3/2*i*y - -x, 2*x*xi,\n"
      "      x*(y + xi*xi)\n"
      "point 1/2, (1 + i)\n");
  const auto& gens = src.presentation.even_gens;
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].ToString(), "x^2 - x + 3/2*i*y + 1");
  EXPECT_EQ(gens[1].ToString(), "x*y");
  EXPECT_EQ(src.presentation.odd_gens[0].ToString(), "2*x*xi");
  EXPECT_EQ(PrintPoint(*src.point), "point 1/2, (1 + i)");
}

TEST(DslTest, MixedParityRejected) {
  const auto e = CatchParse("evens x\nodds xi\nideal x + xi\n");
  EXPECT_EQ(e.kind(), ErrorKind::kMixedParityGenerator);
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 7);
}

TEST(DslTest, Diagnostics) {
  EXPECT_EQ(CatchParse("evens x\nideal x + z\n").kind(), ErrorKind::kUnknownVariable);
  const auto bad = CatchParse("evens x\nideal x +\n");
  EXPECT_EQ(bad.kind(), ErrorKind::kParseError);
  EXPECT_EQ(bad.line(), 2);
  EXPECT_NE(std::string(bad.what()).find("expected"), std::string::npos);
  EXPECT_EQ(CatchParse("evens x\nevens y\n").line(), 2);
  EXPECT_EQ(CatchParse("evens x x\n").kind(), ErrorKind::kDuplicateVariable);
  EXPECT_EQ(CatchParse("evens x\npoint 1 2\n").kind(), ErrorKind::kParseError);
  EXPECT_EQ(CatchParse("evens x\nideal x/0\n").kind(), ErrorKind::kParseError);
  EXPECT_EQ(CatchParse("evens x\nideal 1/x\n").kind(), ErrorKind::kParseError);
  EXPECT_EQ(CatchParse("evens x\nideal x^-1\n").kind(), ErrorKind::kParseError);
  EXPECT_EQ(CatchParse("evens x\nideal 1.5*x\n").kind(), ErrorKind::kParseError);
  EXPECT_EQ(CatchParse("evens i\n").kind(), ErrorKind::kParseError);
  EXPECT_EQ(CatchParse("frobnicate\n").line(), 1);
}

TEST(DslTest, MatrixFile) {
  const auto mf = ParseMatrixFile(Fixture("matrix11.mat"));
  EXPECT_EQ(mf.matrix.even_dim(), 1u);
  EXPECT_EQ(mf.matrix.odd_dim(), 1u);
  EXPECT_EQ(Berezinian(mf.matrix), SuperPolynomial::Constant(mf.matrix.table(), Scalar(1)));
  EXPECT_THROW(ParseMatrixFile("odds t\nblocks 1 1\nt, t\nt, 1\n"), ParseError);
  EXPECT_THROW(ParseMatrixFile("odds t\nblocks 1 1\n1, t\n"), ParseError);
}

TEST(DslTest, ActionFile) {
  const auto af = ParseActionFile(Fixture("ber_action.act"));
  EXPECT_EQ(af.point, ClosedPoint{{Scalar(1)}});
  const auto direct = BerezinianAction(1, 1);
  EXPECT_EQ(af.action.comorphism_even, direct.comorphism_even);
  EXPECT_EQ(StabilizerIdeal(af.action, af.point).base, SlPresentation(1, 1).base);
  EXPECT_THROW(ParseActionFile("group gl 1 1\nevens t\naction t = ber*t\n"), ParseError);
  EXPECT_THROW(ParseActionFile("group gl 1 1\nevens t\npoint 1\n"), ParseError);
  EXPECT_THROW(ParseActionFile("group foo 1 1\nevens t\naction t = t\npoint 1\n"), ParseError);
}

TEST(DslTest, ParsePoint) {
  auto t = VarTable::Make({"a", "b"}, {});
  EXPECT_EQ(ParsePoint("1, -1/2", t), (ClosedPoint{{Scalar(1), Scalar::Rational(-1, 2)}}));
  EXPECT_EQ(ParsePoint("0 -3", t), (ClosedPoint{{Scalar(0), Scalar(-3)}}));
  EXPECT_THROW(ParsePoint("1", t), ParseError);
}

// print -> parse is the identity on presentations and points.
TEST(DslProperty, RoundTrip) {
  Random rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = rng.Int(0, 3), n = rng.Int(0, 3);
    auto t = testing::MakeTable(m, n);
    std::vector<SuperPolynomial> gens;
    for (int k = rng.Int(0, 4); k > 0; --k) {
      SuperPolynomial g = rng.Poly(t, 3, n > 0 ? rng.Int(0, 1) : 0);
      g = g * rng.SmallScalar(true);
      if (!g.is_zero()) gens.push_back(g);
    }
    const auto x = Presentation::Make(t, gens);
    ClosedPoint p;
    for (int i = 0; i < m; ++i) p.coords.push_back(rng.SmallScalar(true));
    const std::string text = PrintPresentation(x, p);
    const auto back = ParseSource(text);
    EXPECT_EQ(back.presentation, x) << text;
    ASSERT_TRUE(back.point);
    EXPECT_EQ(*back.point, p) << text;
    EXPECT_EQ(PrintPresentation(back.presentation, back.point), text);
  }
}

}  // namespace
}  // namespace supergeom
