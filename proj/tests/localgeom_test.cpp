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


#include "supergeom/localgeom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace supergeom {
namespace {

using testing::Random;

class LocalGeomTest : public ::testing::Test {
 protected:
  VarTablePtr t_ = VarTable::Make({"x", "y"}, {"xi", "eta"});
  SuperPolynomial x_ = SuperPolynomial::Var(t_, "x");
  SuperPolynomial y_ = SuperPolynomial::Var(t_, "y");
  SuperPolynomial xi_ = SuperPolynomial::Var(t_, "xi");
  SuperPolynomial eta_ = SuperPolynomial::Var(t_, "eta");
  SuperPolynomial C(long v) { return SuperPolynomial::Constant(t_, Scalar(v)); }
  Presentation Ideal(std::vector<SuperPolynomial> gens) { return Presentation::Make(t_, gens); }
  static ClosedPoint Pt(long a, long b) { return ClosedPoint{{Scalar(a), Scalar(b)}}; }
};

// Monomials of degree <= k, built by multiplying variables one at a time.
std::vector<SuperPolynomial> OracleMonomials(const VarTablePtr& t, int k) {
  std::map<testing::OracleKey, SuperPolynomial> all;
  std::vector<SuperPolynomial> frontier = {SuperPolynomial::Constant(t, Scalar(1))};
  all.emplace(testing::ToOracle(frontier[0]).begin()->first, frontier[0]);
  for (int d = 1; d <= k; ++d) {
    std::vector<SuperPolynomial> next;
    for (const auto& mono : frontier) {
      for (std::size_t i = 0; i < t->num_even(); ++i) next.push_back(SuperPolynomial::EvenVar(t, i) * mono);
      for (std::size_t j = 0; j < t->num_odd(); ++j) next.push_back(SuperPolynomial::OddVar(t, j) * mono);
    }
    frontier.clear();
    for (auto& p : next) {
      if (p.is_zero()) continue;
      const auto key = testing::ToOracle(p).begin()->first;
      if (all.emplace(key, p).second) frontier.push_back(p);
    }
  }
  std::vector<SuperPolynomial> out;
  for (auto& [key, p] : all) out.push_back(p);
  return out;
}

// t(k) by a dense rank computation at truncation order k, with no echelon
// bookkeeping shared with the library.
int OracleT(const Presentation& x, const ClosedPoint& p, int k) {
  const auto monos = OracleMonomials(x.vars, k);
  std::map<testing::OracleKey, std::size_t> col;
  for (const auto& m : monos) col.emplace(testing::ToOracle(m).begin()->first, col.size());
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const auto& g : x.generators()) {
    const SuperPolynomial shifted = ShiftToOrigin(g, p);
    for (const auto& mu : monos) {
      std::vector<std::pair<std::size_t, Scalar>> row;
      for (const auto& [key, c] : testing::ToOracle((mu * shifted).Truncated(k))) {
        row.emplace_back(col.at(key), c);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  DenseMatrix dense(rows.size(), col.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) dense(r, c) = v;
  }
  return static_cast<int>(col.size() - BareissRank(dense));
}

TEST_F(LocalGeomTest, PointOnVariety) {
  const auto circle = Ideal({x_ * x_ + y_ * y_ - C(1)});
  EXPECT_TRUE(PointOnVariety(circle, Pt(1, 0)));
  EXPECT_FALSE(PointOnVariety(circle, Pt(0, 0)));
  EXPECT_TRUE(PointOnVariety(Ideal({xi_ * eta_}), Pt(5, -7)));
  EXPECT_THROW(PointOnVariety(circle, ClosedPoint{{Scalar(1)}}), Error);
}

TEST_F(LocalGeomTest, TangentDim) {
  EXPECT_EQ(TangentDim(Ideal({xi_ * eta_}), Pt(0, 0)), (SuperDim{2, 2}));
  EXPECT_EQ(TangentDim(Ideal({x_ * xi_ + y_ * eta_}), Pt(1, 0)), (SuperDim{2, 1}));
  auto t = VarTable::Make({"x"}, {"xi"});
  EXPECT_EQ(TangentDim(Presentation::Make(t, {}), ClosedPoint::Origin(1)), (SuperDim{1, 1}));
  try {
    TangentDim(Ideal({x_ - C(1)}), Pt(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPointNotOnVariety);
  }
}

TEST_F(LocalGeomTest, TruncatedQuotientExamples) {
  auto t11 = VarTable::Make({"x"}, {"xi"});
  const auto free11 = TruncatedQuotient(Presentation::Make(t11, {}), ClosedPoint::Origin(1), 2);
  EXPECT_EQ(free11.TTable(), (std::vector<int>{1, 3, 5}));

  const auto ex1 = TruncatedQuotient(Ideal({xi_ * eta_}), Pt(0, 0), 2);
  EXPECT_EQ(ex1.t(2), 12);

  auto t10 = VarTable::Make({"x"}, {});
  const auto x = SuperPolynomial::Var(t10, "x");
  const auto sq = TruncatedQuotient(Presentation::Make(t10, std::vector{x * x}),
                                    ClosedPoint::Origin(1), 3);
  EXPECT_EQ(sq.TTable(), (std::vector<int>{1, 2, 2, 2}));

  try {
    TruncatedQuotient(Ideal({}), Pt(0, 0), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOrderTooSmall);
  }
  EXPECT_THROW(TruncatedQuotient(Ideal({x_}), Pt(1, 0), 2), Error);
}

TEST_F(LocalGeomTest, HilbertFunctionExamples) {
  EXPECT_EQ(HilbertFunction(TruncatedQuotient(Ideal({}), Pt(0, 0), 3), 2), 8);
  const auto ex1 = TruncatedQuotient(Ideal({xi_ * eta_}), Pt(0, 0), 3);
  EXPECT_EQ(HilbertFunction(ex1, 2), 7);
  EXPECT_EQ(HilbertFunction(ex1, 0), 1);
  EXPECT_THROW(HilbertFunction(ex1, 4), Error);
  EXPECT_THROW(HilbertFunction(ex1, -1), Error);
}

TEST(FreeModelHilbertTest, Examples) {
  EXPECT_EQ(FreeModelHilbert(2, 2, 2), 8);
  EXPECT_EQ(FreeModelHilbert(2, 1, 2), 5);
  for (int r = 0; r < 4; ++r) {
    for (int s = 0; s < 4; ++s) EXPECT_EQ(FreeModelHilbert(r, s, 0), 1);
  }
  EXPECT_EQ(FreeModelHilbert(0, 2, 2), 1);
  EXPECT_EQ(FreeModelHilbert(0, 2, 3), 0);
}

TEST(FreeModelHilbertTest, MatchesEnumeration) {
  for (int r = 0; r <= 4; ++r) {
    for (int s = 0; s <= 4; ++s) {
      for (int d = 0; d <= 6; ++d) {
        EXPECT_EQ(FreeModelHilbert(r, s, d), testing::CountMonomials(r, s, d))
            << r << "|" << s << " d=" << d;
      }
    }
  }
}

TEST_F(LocalGeomTest, LocalMembershipExamples) {
  const std::vector<SuperPolynomial> none;
  EXPECT_FALSE(LocalMembership(xi_ * eta_, none, Pt(0, 0), 2));
  EXPECT_TRUE(LocalMembership(xi_ * eta_, none, Pt(0, 0), 1));

  const SuperPolynomial f = x_ - y_ * y_;
  const std::vector<SuperPolynomial> sel = {f};
  EXPECT_TRUE(LocalMembership(x_ * f, sel, Pt(0, 0), 5));
  EXPECT_TRUE(LocalMembership(f + y_ * y_ * y_, sel, Pt(0, 0), 2));
  EXPECT_FALSE(LocalMembership(f + y_ * y_ * y_, sel, Pt(0, 0), 3));
  // x^3 = y^6 modulo f, so it only shows up from order 6 on.
  EXPECT_TRUE(LocalMembership(x_ * x_ * x_, none, Pt(0, 0), 2));
  EXPECT_TRUE(LocalMembership(x_ * x_ * x_, sel, Pt(0, 0), 5));
  EXPECT_FALSE(LocalMembership(x_ * x_ * x_, sel, Pt(0, 0), 6));
  // Away from the origin the selected generator need not vanish.
  EXPECT_THROW(LocalMembership(x_, sel, Pt(1, 0), 2), Error);
}

TEST_F(LocalGeomTest, MinimalGeneratorCount) {
  EXPECT_EQ(MinimalGeneratorCount(TruncatedQuotient(Ideal({}), Pt(0, 0), 2)), (SuperDim{2, 2}));
  EXPECT_EQ(MinimalGeneratorCount(TruncatedQuotient(Ideal({x_ * xi_ + y_ * eta_}), Pt(1, 0), 2)),
            (SuperDim{2, 1}));
  auto t10 = VarTable::Make({"x"}, {});
  const auto x = SuperPolynomial::Var(t10, "x");
  EXPECT_EQ(MinimalGeneratorCount(TruncatedQuotient(Presentation::Make(t10, std::vector{x * x}),
                                                    ClosedPoint::Origin(1), 2)),
            (SuperDim{1, 0}));
  EXPECT_THROW(MinimalGeneratorCount(TruncatedQuotient(Ideal({}), Pt(0, 0), 1)), Error);
}

TEST_F(LocalGeomTest, SmoothTestExample1) {
  const auto v = SmoothTest(Ideal({xi_ * eta_}), Pt(0, 0), 4);
  EXPECT_EQ(v.verdict, Verdict::kNotSmooth);
  EXPECT_EQ(v.witness_degree, 2);
  EXPECT_EQ(v.tangent, (SuperDim{2, 2}));
  // h(d) = (d+1) + 2d: even monomials in x, y plus one odd factor.
  EXPECT_EQ(v.hilbert, (std::vector<int>{1, 4, 7, 10, 13}));
}

TEST_F(LocalGeomTest, SmoothTestExample2) {
  const auto ex2 = Ideal({x_ * xi_ + y_ * eta_});
  const auto smooth = SmoothTest(ex2, Pt(1, 0), 4);
  EXPECT_EQ(smooth.verdict, Verdict::kSmoothExact);
  EXPECT_TRUE(smooth.complete_intersection);
  EXPECT_EQ(smooth.dim, (SuperDim{2, 1}));

  const auto origin = SmoothTest(ex2, Pt(0, 0), 4);
  EXPECT_EQ(origin.verdict, Verdict::kNotSmooth);
  EXPECT_EQ(origin.tangent, (SuperDim{2, 2}));
  EXPECT_TRUE(origin.failed_generator.has_value());
}

TEST_F(LocalGeomTest, SmoothTestErrors) {
  EXPECT_THROW(SmoothTest(Ideal({x_ - C(1)}), Pt(0, 0), 4), Error);
  try {
    SmoothTest(Ideal({xi_ * eta_}), Pt(0, 0), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOrderTooSmall);
  }
}

TEST_F(LocalGeomTest, SmoothToOrderForRedundantGenerators) {
  // The second generator is a multiple of the first: not a complete
  // intersection, but smooth to every order.
  const auto v = SmoothTest(Ideal({x_ - y_ * y_, x_ * y_ - y_ * y_ * y_}), Pt(0, 0), 5);
  EXPECT_EQ(v.verdict, Verdict::kSmoothToOrder);
  EXPECT_EQ(v.dim, (SuperDim{1, 2}));
  EXPECT_FALSE(v.complete_intersection);
  EXPECT_EQ(v.order, 5);
  ASSERT_EQ(v.hilbert.size(), 6u);
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(v.hilbert[static_cast<std::size_t>(d)], FreeModelHilbert(1, 2, d));
}

TEST_F(LocalGeomTest, DefaultOrder) {
  EXPECT_EQ(DefaultOrder(Ideal({xi_ * eta_})), 2 * 2 + 2 + 2);
}

// Random presentations with a rational point on them.
struct Sample {
  Presentation x;
  ClosedPoint p;
};

Sample RandomSample(Random& rng, int max_vars = 3, int max_degree = 3) {
  const int m = rng.Int(0, max_vars), n = rng.Int(0, max_vars);
  auto t = testing::MakeTable(m, n);
  const auto p = rng.Point(static_cast<std::size_t>(m));
  return {testing::RandomPresentationThrough(rng, t, p, max_degree, 3), p};
}

TEST(LocalGeomProperty, TTableMatchesDenseOracle) {
  Random rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = RandomSample(rng, 2, 2);
    const int order = 3;
    const auto ring = TruncatedQuotient(s.x, s.p, order);
    for (int k = 0; k <= order; ++k) {
      EXPECT_EQ(ring.t(k), OracleT(s.x, s.p, k)) << "trial " << trial << " k=" << k;
    }
  }
}

TEST(LocalGeomProperty, RankPlusTangentIsAmbient) {
  Random rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = RandomSample(rng);
    const auto rank = ComputeSuperRank(JacobianAt(s.x, s.p));
    const auto h1 = TruncatedQuotient(s.x, s.p, 2).HilbertSplit(1);
    EXPECT_EQ(rank.even + h1.even, static_cast<int>(s.x.num_even_vars()));
    EXPECT_EQ(rank.odd + h1.odd, static_cast<int>(s.x.num_odd_vars()));
  }
}

TEST(LocalGeomProperty, HilbertBoundedByFreeModel) {
  Random rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = RandomSample(rng);
    const auto tangent = TangentDim(s.x, s.p);
    const auto ring = TruncatedQuotient(s.x, s.p, 4);
    for (int d = 0; d <= 4; ++d) {
      EXPECT_LE(ring.Hilbert(d), FreeModelHilbert(tangent.even, tangent.odd, d));
    }
  }
}

TEST(LocalGeomProperty, NotSmoothPersistsAtHigherOrder) {
  Random rng(34);
  int not_smooth = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = RandomSample(rng, 2, 2);
    const auto low = SmoothTest(s.x, s.p, 3);
    if (low.verdict != Verdict::kNotSmooth) continue;
    ++not_smooth;
    const auto high = SmoothTest(s.x, s.p, 5);
    EXPECT_EQ(high.verdict, Verdict::kNotSmooth);
    if (low.witness_degree) {
      EXPECT_EQ(high.witness_degree, low.witness_degree);
    }
    if (low.failed_generator) {
      EXPECT_TRUE(high.failed_generator.has_value());
    }
  }
  EXPECT_GT(not_smooth, 0);
}

TEST(LocalGeomProperty, EmptyIdealIsSmooth) {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      auto t = testing::MakeTable(m, n);
      const auto v = SmoothTest(Presentation::Make(t, {}), ClosedPoint::Origin(static_cast<std::size_t>(m)));
      EXPECT_EQ(v.verdict, Verdict::kSmoothExact);
      EXPECT_EQ(v.dim, (SuperDim{m, n}));
    }
  }
}

TEST(LocalGeomProperty, InvariantUnderPermutationAndScaling) {
  Random rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = RandomSample(rng, 2, 2);
    auto gens = s.x.generators();
    std::shuffle(gens.begin(), gens.end(), rng.engine());
    for (auto& g : gens) g = g * rng.NonzeroScalar();
    const auto y = Presentation::Make(s.x.vars, gens);
    const auto a = SmoothTest(s.x, s.p, 4);
    const auto b = SmoothTest(y, s.p, 4);
    EXPECT_EQ(a.verdict, b.verdict) << "trial " << trial;
    EXPECT_EQ(a.dim, b.dim);
    EXPECT_EQ(a.witness_degree, b.witness_degree);
    EXPECT_EQ(a.hilbert, b.hilbert);
  }
}

}  // namespace
}  // namespace supergeom
