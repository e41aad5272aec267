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


#include "supergeom/supergroups.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace supergeom {
namespace {

using testing::Random;

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kUnknownVariable;
}

std::vector<std::string> Names(const std::vector<SuperPolynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.ToString());
  return out;
}

TEST(GlTest, Gl11Presentation) {
  const auto g = GlPresentation(1, 1);
  EXPECT_EQ(g.base.vars->even_names(), (std::vector<std::string>{"x11", "y11", "z", "w"}));
  EXPECT_EQ(g.base.vars->odd_names(), (std::vector<std::string>{"xi11", "gamma11"}));
  EXPECT_EQ(Names(g.base.even_gens), (std::vector<std::string>{"x11*w - 1", "y11*z - 1"}));
  EXPECT_TRUE(g.base.odd_gens.empty());
  EXPECT_TRUE(PointOnVariety(g.base, g.identity));
  EXPECT_EQ(LieSuperdim(g), (SuperDim{2, 2}));
}

TEST(GlTest, Dimensions) {
  EXPECT_EQ(LieSuperdim(GlPresentation(2, 1)), (SuperDim{5, 4}));
  EXPECT_EQ(LieSuperdim(GlPresentation(1, 2)), (SuperDim{5, 4}));
  const auto gl10 = GlPresentation(1, 0);
  EXPECT_EQ(gl10.base.vars->even_names(), (std::vector<std::string>{"x11", "w"}));
  EXPECT_EQ(Names(gl10.base.even_gens), (std::vector<std::string>{"x11*w - 1"}));
  EXPECT_EQ(LieSuperdim(gl10), (SuperDim{1, 0}));
  EXPECT_EQ(LieSuperdim(GlPresentation(0, 2)), (SuperDim{4, 0}));
  EXPECT_EQ(KindOf([] { GlPresentation(0, 0); }), ErrorKind::kBadDims);
  EXPECT_EQ(KindOf([] { GlPresentation(-1, 2); }), ErrorKind::kBadDims);
}

TEST(GlTest, GenericBerezinian11) {
  GlLayout gl(1, 1);
  const auto& t = gl.table();
  // (x - xi z gamma) z written as words in the order they are read.
  const testing::RawPoly raw = {{Scalar(1), {0, 2}}, {Scalar(-1), {4, 2, 5, 2}}};
  const auto expected = testing::FromRaw(t, raw);
  EXPECT_EQ(GenericBerezinian(1, 1), expected);
  EXPECT_EQ(GenericBerezinian(1, 1).ToString(), "-z^2*xi11*gamma11 + x11*z");
  EXPECT_EQ(Evaluate(GenericBerezinian(1, 1), gl.Identity()), Scalar(1));
  EXPECT_EQ(GenericBerezinian(1, 0).ToString(), "x11");
  EXPECT_EQ(Evaluate(GenericBerezinian(2, 1), GlLayout(2, 1).Identity()), Scalar(1));
}

// Substituting a numeric Grassmann supermatrix into the generic formula
// gives its Berezinian.
TEST(GlTest, GenericBerezinianAgreesWithNumeric) {
  Random rng(51);
  const std::pair<int, int> dims[] = {{1, 1}, {2, 1}, {1, 2}};
  for (auto [m, n] : dims) {
    const GlLayout gl(m, n);
    const auto ber = GenericBerezinian(m, n);
    for (int trial = 0; trial < 10; ++trial) {
      auto t = testing::MakeTable(0, 4);
      const auto a = testing::MakeRandom(rng, t, static_cast<std::size_t>(m),
                                         static_cast<std::size_t>(n))
                         .matrix;
      std::vector<SuperPolynomial> evens, odds;
      const auto p = a.p(), q = a.q(), r = a.r(), s = a.s();
      for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) evens.push_back(p(i, j));
      for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) evens.push_back(s(i, j));
      evens.push_back(GrassmannInverse(EvenDeterminant(s)));
      evens.push_back(GrassmannInverse(EvenDeterminant(p)));
      for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) odds.push_back(q(i, j));
      for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) odds.push_back(r(i, j));
      EXPECT_EQ(Substitute(ber, t, evens, odds), Berezinian(a)) << m << "|" << n;
    }
  }
}

TEST(SlTest, Sl11) {
  const auto g = SlPresentation(1, 1);
  EXPECT_EQ(Names(g.base.even_gens),
            (std::vector<std::string>{"x11*w - 1", "y11*z - 1", "-z^2*xi11*gamma11 + x11*z - 1"}));
  EXPECT_TRUE(PointOnVariety(g.base, g.identity));
  EXPECT_EQ(LieSuperdim(g), (SuperDim{1, 2}));
  EXPECT_EQ(SmoothTest(g.base, g.identity).verdict, Verdict::kSmoothExact);
  EXPECT_EQ(LieSuperdim(SlPresentation(2, 1)), (SuperDim{4, 4}));
}

TEST(FormTest, OrthosymplecticDimensions) {
  const auto osp = OspPresentation(1, 2);
  EXPECT_TRUE(PointOnVariety(osp.base, osp.identity));
  EXPECT_EQ(LieSuperdim(osp), (SuperDim{3, 2}));
  EXPECT_EQ(LieSuperdim(OspPresentation(2, 0)), (SuperDim{1, 0}));
  EXPECT_EQ(LieSuperdim(OspPresentation(3, 0)), (SuperDim{3, 0}));
  EXPECT_EQ(LieSuperdim(OspPresentation(0, 2)), (SuperDim{3, 0}));
  EXPECT_EQ(LieSuperdim(PspPresentation(2, 1)), (SuperDim{3, 2}));
}

TEST(FormTest, Errors) {
  EXPECT_EQ(KindOf([] { OspPresentation(1, 1); }), ErrorKind::kBadDims);
  EXPECT_EQ(KindOf([] { PspPresentation(1, 1); }), ErrorKind::kBadDims);
  DenseMatrix degenerate(3, 3);
  degenerate(0, 0) = Scalar(1);
  EXPECT_EQ(KindOf([&] {
              FormStabilizerPresentation(1, 2, degenerate, FormFlavor::kSuperSymmetric);
            }),
            ErrorKind::kBadForm);
  // The identity is symmetric on the odd block, so it has the wrong flavor.
  EXPECT_EQ(KindOf([] {
              FormStabilizerPresentation(1, 2, DenseMatrix::Identity(3),
                                         FormFlavor::kSuperSymmetric);
            }),
            ErrorKind::kBadForm);
  EXPECT_EQ(KindOf([] {
              FormStabilizerPresentation(1, 2, StandardForm(1, 2, FormFlavor::kSuperSymmetric),
                                         FormFlavor::kSuperAntisymmetric);
            }),
            ErrorKind::kBadForm);
}

TEST(GroupProperty, SmoothAtIdentityWithFreeHilbertFunction) {
  const GroupPresentation groups[] = {GlPresentation(1, 1), SlPresentation(1, 1),
                                      OspPresentation(1, 2), GlPresentation(1, 0)};
  for (const auto& g : groups) {
    EXPECT_EQ(g.Counit(SuperPolynomial::Constant(g.base.vars, Scalar(5))), Scalar(5));
    for (const auto& rel : g.base.generators()) EXPECT_TRUE(g.Counit(rel).is_zero()) << g.name;
    const auto dim = LieSuperdim(g);
    const auto ring = TruncatedQuotient(g.base, g.identity, 4);
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(ring.Hilbert(d), FreeModelHilbert(dim.even, dim.odd, d)) << g.name << " d=" << d;
    }
    EXPECT_NE(SmoothTest(g.base, g.identity, 4).verdict, Verdict::kNotSmooth) << g.name;
  }
}

TEST(StabilizerTest, BerActionGivesSl11) {
  const auto stab = StabilizerIdeal(BerezinianAction(1, 1), ClosedPoint{{Scalar(1)}});
  const auto sl = SlPresentation(1, 1);
  EXPECT_EQ(stab.base, sl.base);
  EXPECT_EQ(TruncatedQuotient(stab.base, stab.identity, 4).TTable(),
            TruncatedQuotient(sl.base, sl.identity, 4).TTable());
}

TEST(StabilizerTest, ScalingActionIsTrivial) {
  auto gl = GlPresentation(1, 0);
  auto line = VarTable::Make({"t"}, {});
  auto joint = JointTable(*gl.base.vars, *line);
  const auto image = SuperPolynomial::Var(joint, "x11") * SuperPolynomial::Var(joint, "t");
  const auto action = ActionPresentation::Make(gl, Presentation{line, {}, {}}, {image}, {});
  const auto stab = StabilizerIdeal(action, ClosedPoint{{Scalar(1)}});
  EXPECT_EQ(Names(stab.base.even_gens), (std::vector<std::string>{"x11*w - 1", "x11 - 1"}));
  EXPECT_EQ(LieSuperdim(stab), (SuperDim{0, 0}));
  EXPECT_TRUE(PointOnVariety(stab.base, stab.identity));
}

TEST(StabilizerTest, Errors) {
  auto gl = GlPresentation(1, 0);
  auto line = VarTable::Make({"t"}, {"e"});
  auto joint = JointTable(*gl.base.vars, *line);
  const auto t = SuperPolynomial::Var(joint, "t");
  const auto e = SuperPolynomial::Var(joint, "e");
  const auto one = SuperPolynomial::Constant(joint, Scalar(1));
  const Presentation space{line, {}, {}};
  EXPECT_EQ(KindOf([&] { ActionPresentation::Make(gl, space, {e}, {t}); }),
            ErrorKind::kBadAction);
  EXPECT_EQ(KindOf([&] { ActionPresentation::Make(gl, space, {t}, {}); }), ErrorKind::kBadAction);
  // Translation by 1 does not fix any point.
  const auto shift = ActionPresentation::Make(gl, space, {t + one}, {e});
  EXPECT_EQ(KindOf([&] { StabilizerIdeal(shift, ClosedPoint{{Scalar(0)}}); }),
            ErrorKind::kBadAction);

  const auto on_line = Presentation::Make(line, std::vector{SuperPolynomial::Var(line, "t")});
  const auto act = ActionPresentation::Make(gl, on_line, {t}, {e});
  EXPECT_EQ(KindOf([&] { StabilizerIdeal(act, ClosedPoint{{Scalar(1)}}); }),
            ErrorKind::kPointNotOnVariety);
}

}  // namespace
}  // namespace supergeom
