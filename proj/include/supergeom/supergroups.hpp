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

// Coordinate superalgebras of the classical supergroups, presented as
// quotients of polynomial superalgebras, together with their identity
// points, and the stabilizer construction for an action G x X -> X.
//
// Only the counit (evaluation at the identity) is materialized; the
// coproduct and antipode are not needed by anything here.

#ifndef SUPERGEOM_SUPERGROUPS_HPP_
#define SUPERGEOM_SUPERGROUPS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "supergeom/localgeom.hpp"
#include "supergeom/supermatrix.hpp"
#include "supergeom/superpoly.hpp"

namespace supergeom {

struct GroupPresentation {
  std::string name;
  Presentation base;
  ClosedPoint identity;

  Scalar Counit(const SuperPolynomial& g) const { return Evaluate(g, identity); }
};

namespace internal {

inline std::string IndexedName(const std::string& prefix, std::size_t i, std::size_t j,
                               bool wide) {
  return prefix + std::to_string(i + 1) + (wide ? "_" : "") + std::to_string(j + 1);
}

}  // namespace internal

// Variable layout of C[GL_{m|n}]: x (m x m), y (n x n), z, w even;
// xi (m x n), gamma (n x m) odd. For n = 0 the y block and z are omitted,
// for m = 0 the x block and w.
class GlLayout {
 public:
  GlLayout(int m, int n) : m_(static_cast<std::size_t>(m)), n_(static_cast<std::size_t>(n)) {
    if (m < 0 || n < 0 || m + n < 1) {
      throw Error(ErrorKind::kBadDims, "gl(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
    const bool wide = m > 9 || n > 9;
    std::vector<std::string> evens, odds;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) evens.push_back(internal::IndexedName("x", i, j, wide));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) evens.push_back(internal::IndexedName("y", a, b, wide));
    if (n_ > 0) evens.push_back("z");
    if (m_ > 0) evens.push_back("w");
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t b = 0; b < n_; ++b) odds.push_back(internal::IndexedName("xi", i, b, wide));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t j = 0; j < m_; ++j)
        odds.push_back(internal::IndexedName("gamma", a, j, wide));
    table_ = VarTable::Make(std::move(evens), std::move(odds));
  }

  const VarTablePtr& table() const { return table_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

  SuperPolynomial x(std::size_t i, std::size_t j) const {
    return SuperPolynomial::EvenVar(table_, i * m_ + j);
  }
  SuperPolynomial y(std::size_t a, std::size_t b) const {
    return SuperPolynomial::EvenVar(table_, m_ * m_ + a * n_ + b);
  }
  SuperPolynomial z() const { return SuperPolynomial::Var(table_, "z"); }
  SuperPolynomial w() const { return SuperPolynomial::Var(table_, "w"); }
  SuperPolynomial xi(std::size_t i, std::size_t b) const {
    return SuperPolynomial::OddVar(table_, i * n_ + b);
  }
  SuperPolynomial gamma(std::size_t a, std::size_t j) const {
    return SuperPolynomial::OddVar(table_, m_ * n_ + a * m_ + j);
  }

  // The generic element [[x, xi], [gamma, y]].
  SuperMatrix GenericMatrix() const {
    PolyMatrix all(table_, m_ + n_, m_ + n_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) all(i, j) = x(i, j);
      for (std::size_t b = 0; b < n_; ++b) all(i, m_ + b) = xi(i, b);
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t j = 0; j < m_; ++j) all(m_ + a, j) = gamma(a, j);
      for (std::size_t b = 0; b < n_; ++b) all(m_ + a, m_ + b) = y(a, b);
    }
    return SuperMatrix(m_, n_, std::move(all));
  }

  ClosedPoint Identity() const {
    ClosedPoint id = ClosedPoint::Origin(table_->num_even());
    for (std::size_t i = 0; i < m_; ++i) id.coords[i * m_ + i] = Scalar(1);
    for (std::size_t a = 0; a < n_; ++a) id.coords[m_ * m_ + a * n_ + a] = Scalar(1);
    for (std::size_t k = m_ * m_ + n_ * n_; k < id.size(); ++k) id.coords[k] = Scalar(1);
    return id;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  VarTablePtr table_;
};

inline GroupPresentation GlPresentation(int m, int n) {
  GlLayout gl(m, n);
  const auto& t = gl.table();
  const SuperPolynomial one = SuperPolynomial::Constant(t, Scalar(1));
  std::vector<SuperPolynomial> rels;
  const SuperMatrix g = gl.GenericMatrix();
  if (gl.m() > 0) rels.push_back(gl.w() * EvenDeterminant(g.p()) - one);
  if (gl.n() > 0) rels.push_back(gl.z() * EvenDeterminant(g.s()) - one);
  return {"gl(" + std::to_string(m) + "," + std::to_string(n) + ")",
          Presentation::Make(t, rels), gl.Identity()};
}

// det(x - xi s^-1 gamma) * det(s^-1) with s^-1 = z adj(y) and det(s^-1) = z,
// as a polynomial over the GL_{m|n} variables.
inline SuperPolynomial GenericBerezinian(int m, int n) {
  GlLayout gl(m, n);
  const SuperMatrix g = gl.GenericMatrix();
  if (gl.n() == 0) return EvenDeterminant(g.p());
  const PolyMatrix s_inv = gl.z() * Adjugate(g.s());
  return EvenDeterminant(g.p() - g.q() * s_inv * g.r()) * gl.z();
}

inline GroupPresentation SlPresentation(int m, int n) {
  GroupPresentation gl = GlPresentation(m, n);
  const auto& t = gl.base.vars;
  gl.base.even_gens.push_back(GenericBerezinian(m, n) - SuperPolynomial::Constant(t, Scalar(1)));
  gl.name = "sl(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return gl;
}

enum class FormFlavor { kSuperSymmetric, kSuperAntisymmetric };

// Standard even forms on C^{m|n}: I_m + J on the odd block for the
// super-symmetric flavor, J on the even block + I_n for the other.
inline DenseMatrix StandardForm(int m, int n, FormFlavor flavor) {
  if (m < 0 || n < 0 || m + n < 1) throw Error(ErrorKind::kBadDims, "form dimensions");
  const int symplectic = flavor == FormFlavor::kSuperSymmetric ? n : m;
  if (symplectic % 2 != 0) {
    throw Error(ErrorKind::kBadDims, "the symplectic block needs even size, got " +
                                         std::to_string(symplectic));
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  const std::size_t start = flavor == FormFlavor::kSuperSymmetric ? static_cast<std::size_t>(m) : 0;
  const std::size_t half = static_cast<std::size_t>(symplectic / 2);
  DenseMatrix phi(size, size);
  for (std::size_t k = 0; k < size; ++k) {
    const bool in_symplectic = k >= start && k < start + 2 * half;
    if (!in_symplectic) phi(k, k) = Scalar(1);
  }
  for (std::size_t k = 0; k < half; ++k) {
    phi(start + k, start + half + k) = Scalar(1);
    phi(start + half + k, start + k) = Scalar(-1);
  }
  return phi;
}

inline void CheckForm(int m, int n, const DenseMatrix& phi, FormFlavor flavor) {
  const auto mm = static_cast<std::size_t>(m);
  const auto size = static_cast<std::size_t>(m + n);
  if (phi.rows() != size || phi.cols() != size) {
    throw Error(ErrorKind::kBadForm, "form is not " + std::to_string(size) + "x" +
                                         std::to_string(size));
  }
  if (BareissDeterminant(phi).is_zero()) throw Error(ErrorKind::kBadForm, "form is degenerate");
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const bool even_i = i < mm, even_j = j < mm;
      if (even_i != even_j) {
        if (!phi(i, j).is_zero()) throw Error(ErrorKind::kBadForm, "form is not even");
        continue;
      }
      // Symmetric on the even block and antisymmetric on the odd block for
      // the super-symmetric flavor; the reverse for the other.
      const bool symmetric = (flavor == FormFlavor::kSuperSymmetric) == even_i;
      const Scalar expected = symmetric ? phi(j, i) : -phi(j, i);
      if (phi(i, j) != expected) {
        throw Error(ErrorKind::kBadForm, "form does not have the declared symmetry");
      }
    }
  }
}

// Stabilizer of the bilinear form phi in the space of (m+n) x (m+n)
// supermatrices: relations g^st phi g - phi, with zero and proportional
// duplicates removed.
inline GroupPresentation FormStabilizerPresentation(int m, int n, const DenseMatrix& phi,
                                                    FormFlavor flavor) {
  if (m < 0 || n < 0 || m + n < 1) throw Error(ErrorKind::kBadDims, "form dimensions");
  CheckForm(m, n, phi, flavor);
  const auto mm = static_cast<std::size_t>(m), nn = static_cast<std::size_t>(n);
  const bool wide = m > 9 || n > 9;
  std::vector<std::string> evens, odds;
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) evens.push_back(internal::IndexedName("p", i, j, wide));
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = 0; b < nn; ++b) evens.push_back(internal::IndexedName("s", a, b, wide));
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t b = 0; b < nn; ++b) odds.push_back(internal::IndexedName("q", i, b, wide));
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t j = 0; j < mm; ++j) odds.push_back(internal::IndexedName("r", a, j, wide));
  const VarTablePtr t = VarTable::Make(std::move(evens), std::move(odds));

  PolyMatrix all(t, mm + nn, mm + nn);
  std::size_t even_k = 0, odd_k = 0;
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) all(i, j) = SuperPolynomial::EvenVar(t, even_k++);
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = 0; b < nn; ++b) all(mm + a, mm + b) = SuperPolynomial::EvenVar(t, even_k++);
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t b = 0; b < nn; ++b) all(i, mm + b) = SuperPolynomial::OddVar(t, odd_k++);
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t j = 0; j < mm; ++j) all(mm + a, j) = SuperPolynomial::OddVar(t, odd_k++);
  const SuperMatrix g(mm, nn, std::move(all));
  const SuperMatrix form(mm, nn, PolyMatrix::FromNumeric(t, phi));
  const PolyMatrix rel = MatMul(MatMul(Supertranspose(g), form), g).entries() - form.entries();

  std::vector<SuperPolynomial> kept;
  for (std::size_t i = 0; i < mm + nn; ++i) {
    for (std::size_t j = 0; j < mm + nn; ++j) {
      const SuperPolynomial& r = rel(i, j);
      if (r.is_zero()) continue;
      bool duplicate = false;
      for (const auto& k : kept) {
        if (r.IsProportionalTo(k)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) kept.push_back(r);
    }
  }

  ClosedPoint identity = ClosedPoint::Origin(t->num_even());
  for (std::size_t i = 0; i < mm; ++i) identity.coords[i * mm + i] = Scalar(1);
  for (std::size_t a = 0; a < nn; ++a) identity.coords[mm * mm + a * nn + a] = Scalar(1);
  const char* prefix = flavor == FormFlavor::kSuperSymmetric ? "osp(" : "psp(";
  return {prefix + std::to_string(m) + "|" + std::to_string(n) + ")", Presentation::Make(t, kept),
          std::move(identity)};
}

inline GroupPresentation OspPresentation(int m, int n) {
  return FormStabilizerPresentation(m, n, StandardForm(m, n, FormFlavor::kSuperSymmetric),
                                    FormFlavor::kSuperSymmetric);
}

inline GroupPresentation PspPresentation(int m, int n) {
  return FormStabilizerPresentation(m, n, StandardForm(m, n, FormFlavor::kSuperAntisymmetric),
                                    FormFlavor::kSuperAntisymmetric);
}

inline SuperDim LieSuperdim(const GroupPresentation& g) { return TangentDim(g.base, g.identity); }

// Table with the variables of `a` followed by those of `b`, per parity.
inline VarTablePtr JointTable(const VarTable& a, const VarTable& b) {
  std::vector<std::string> evens = a.even_names(), odds = a.odd_names();
  evens.insert(evens.end(), b.even_names().begin(), b.even_names().end());
  odds.insert(odds.end(), b.odd_names().begin(), b.odd_names().end());
  return VarTable::Make(std::move(evens), std::move(odds));
}

// Rewrites p over a table containing all of p's variable names.
inline SuperPolynomial Embed(const SuperPolynomial& p, const VarTablePtr& target) {
  const VarTable& src = *p.table();
  std::vector<SuperPolynomial> evens, odds;
  for (const auto& name : src.even_names()) evens.push_back(SuperPolynomial::Var(target, name));
  for (const auto& name : src.odd_names()) odds.push_back(SuperPolynomial::Var(target, name));
  return Substitute(p, target, evens, odds);
}

// Action G x X -> X given by its comorphism: for every coordinate of X
// (even ones first) a polynomial over the joint table of G and X.
struct ActionPresentation {
  GroupPresentation group;
  Presentation space;
  VarTablePtr joint;
  std::vector<SuperPolynomial> comorphism_even;
  std::vector<SuperPolynomial> comorphism_odd;

  static ActionPresentation Make(GroupPresentation group, Presentation space,
                                 std::vector<SuperPolynomial> comorphism_even,
                                 std::vector<SuperPolynomial> comorphism_odd) {
    VarTablePtr joint = JointTable(*group.base.vars, *space.vars);
    if (comorphism_even.size() != space.num_even_vars() ||
        comorphism_odd.size() != space.num_odd_vars()) {
      throw Error(ErrorKind::kBadAction, "one image per space coordinate is required");
    }
    auto check = [&](std::vector<SuperPolynomial>& images, int parity) {
      for (auto& img : images) {
        img = Embed(img, joint);
        auto p = img.parity();
        if (!img.is_zero() && (!p || *p != parity)) {
          throw Error(ErrorKind::kBadAction, "comorphism does not preserve parity: " +
                                                 img.ToString());
        }
      }
    };
    check(comorphism_even, 0);
    check(comorphism_odd, 1);
    return {std::move(group), std::move(space), std::move(joint), std::move(comorphism_even),
            std::move(comorphism_odd)};
  }
};

// C[Stab_u]: the group relations plus tau(g) = (id x ev_u)(rho*(g)) for g
// running over generators of the maximal ideal of u.
inline GroupPresentation StabilizerIdeal(const ActionPresentation& action, const ClosedPoint& u) {
  if (!PointOnVariety(action.space, u)) {
    throw Error(ErrorKind::kPointNotOnVariety, "u is not a point of the space");
  }
  const VarTablePtr& gt = action.group.base.vars;
  const VarTable& st = *action.space.vars;
  const VarTable& jt = *action.joint;

  // id x ev_u on the joint table.
  std::vector<SuperPolynomial> evens, odds;
  for (std::size_t i = 0; i < jt.num_even(); ++i) {
    if (i < gt->num_even()) {
      evens.push_back(SuperPolynomial::EvenVar(gt, i));
    } else {
      evens.push_back(SuperPolynomial::Constant(gt, u.coords[i - gt->num_even()]));
    }
  }
  for (std::size_t j = 0; j < jt.num_odd(); ++j) {
    odds.push_back(j < gt->num_odd() ? SuperPolynomial::OddVar(gt, j) : SuperPolynomial(gt));
  }
  auto tau = [&](const SuperPolynomial& p) { return Substitute(p, gt, evens, odds); };

  std::vector<SuperPolynomial> tau_even, tau_odd;
  for (const auto& img : action.comorphism_even) tau_even.push_back(tau(img));
  for (const auto& img : action.comorphism_odd) tau_odd.push_back(tau(img));

  std::vector<SuperPolynomial> extra;
  for (std::size_t k = 0; k < st.num_even(); ++k) {
    extra.push_back(tau_even[k] - SuperPolynomial::Constant(gt, u.coords[k]));
  }
  for (std::size_t k = 0; k < st.num_odd(); ++k) extra.push_back(tau_odd[k]);
  // rho* is an algebra map, so tau(h) = h(tau(t)) for relations h of X.
  for (const auto& h : action.space.generators()) {
    extra.push_back(Substitute(h, gt, tau_even, tau_odd));
  }

  GroupPresentation stab = action.group;
  stab.name = "stab(" + action.group.name + ")";
  for (auto& rel : extra) {
    if (rel.is_zero()) continue;
    if (!stab.Counit(rel).is_zero()) {
      throw Error(ErrorKind::kBadAction,
                  "identity does not fix u (relation " + rel.ToString() + ")");
    }
    (*rel.parity() == 0 ? stab.base.even_gens : stab.base.odd_gens).push_back(std::move(rel));
  }
  return stab;
}

// GL_{m|n} acting on C^{1|0} by t -> Ber(g) t.
inline ActionPresentation BerezinianAction(int m, int n, const std::string& coordinate = "t") {
  GroupPresentation gl = GlPresentation(m, n);
  VarTablePtr line = VarTable::Make({coordinate}, {});
  Presentation space{line, {}, {}};
  VarTablePtr joint = JointTable(*gl.base.vars, *line);
  SuperPolynomial image =
      Embed(GenericBerezinian(m, n), joint) * SuperPolynomial::Var(joint, coordinate);
  return ActionPresentation::Make(std::move(gl), std::move(space), {image}, {});
}

}  // namespace supergeom

#endif  // SUPERGEOM_SUPERGROUPS_HPP_
