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

// Exact arithmetic in free commutative superalgebras
// Q(i)[x_1..x_m, xi_1..xi_n] where the x's commute with everything and the
// xi's anticommute pairwise (so xi*xi = 0).
//
// A monomial is stored canonically as x^e * xi_{j1} * ... * xi_{jk} with
// j1 < ... < jk, the odd part kept as a bitmask. Reordering odd factors into
// that form produces the Koszul sign, which is folded into the coefficient.

#ifndef SUPERGEOM_SUPERPOLY_HPP_
#define SUPERGEOM_SUPERPOLY_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "supergeom/error.hpp"
#include "supergeom/scalar.hpp"

namespace supergeom {

inline constexpr std::size_t kMaxOddVariables = 64;

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable {
 public:
  struct VarRef {
    bool odd = false;
    std::size_t index = 0;
  };

  static VarTablePtr Make(std::vector<std::string> even_names,
                          std::vector<std::string> odd_names) {
    if (odd_names.size() > kMaxOddVariables) {
      throw Error(ErrorKind::kTooManyOddVariables,
                  std::to_string(odd_names.size()) + " odd variables (limit " +
                      std::to_string(kMaxOddVariables) + ")");
    }
    auto table = std::shared_ptr<VarTable>(new VarTable());
    table->even_ = std::move(even_names);
    table->odd_ = std::move(odd_names);
    for (std::size_t i = 0; i < table->even_.size(); ++i) {
      table->Register(table->even_[i], {false, i});
    }
    for (std::size_t j = 0; j < table->odd_.size(); ++j) {
      table->Register(table->odd_[j], {true, j});
    }
    return table;
  }

  std::size_t num_even() const { return even_.size(); }
  std::size_t num_odd() const { return odd_.size(); }
  const std::vector<std::string>& even_names() const { return even_; }
  const std::vector<std::string>& odd_names() const { return odd_; }
  const std::string& even_name(std::size_t i) const { return even_.at(i); }
  const std::string& odd_name(std::size_t j) const { return odd_.at(j); }

  std::optional<VarRef> Find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VarRef Lookup(std::string_view name) const {
    auto ref = Find(name);
    if (!ref) throw Error(ErrorKind::kUnknownVariable, "'" + std::string(name) + "'");
    return *ref;
  }

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }

 private:
  VarTable() = default;

  void Register(const std::string& name, VarRef ref) {
    if (!index_.emplace(name, ref).second) {
      throw Error(ErrorKind::kDuplicateVariable, "'" + name + "' declared twice");
    }
  }

  std::vector<std::string> even_;
  std::vector<std::string> odd_;
  std::unordered_map<std::string, VarRef> index_;
};

inline bool SameTable(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

struct SuperMonomial {
  std::vector<std::uint32_t> exps;  // one entry per even variable
  std::uint64_t odd = 0;            // bit j set <=> xi_j present

  static SuperMonomial One(std::size_t num_even) {
    return SuperMonomial{std::vector<std::uint32_t>(num_even, 0), 0};
  }

  int even_degree() const {
    int d = 0;
    for (auto e : exps) d += static_cast<int>(e);
    return d;
  }
  int odd_degree() const { return std::popcount(odd); }
  int degree() const { return even_degree() + odd_degree(); }
  int parity() const { return odd_degree() & 1; }

  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
};

// Graded order: total degree, then even exponents (lexicographic), then the
// odd mask. Iterating a polynomial therefore visits low degrees first.
struct MonomialOrder {
  bool operator()(const SuperMonomial& a, const SuperMonomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.exps != b.exps) return a.exps < b.exps;
    return a.odd < b.odd;
  }
};

// Sign of moving the odd block `b` past the odd block `a` when forming
// (xi^a)(xi^b) -> xi^(a|b) in ascending order. Masks must be disjoint.
inline int KoszulSign(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  while (b != 0) {
    int j = std::countr_zero(b);
    b &= b - 1;
    if (j < 63) swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

struct ClosedPoint {
  std::vector<Scalar> coords;

  static ClosedPoint Origin(std::size_t m) { return {std::vector<Scalar>(m)}; }
  std::size_t size() const { return coords.size(); }
  bool is_origin() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const Scalar& c) { return c.is_zero(); });
  }
  friend bool operator==(const ClosedPoint&, const ClosedPoint&) = default;
};

class SuperPolynomial {
 public:
  using Terms = std::map<SuperMonomial, Scalar, MonomialOrder>;

  explicit SuperPolynomial(VarTablePtr table) : table_(std::move(table)) {}

  static SuperPolynomial Constant(VarTablePtr table, const Scalar& c) {
    SuperPolynomial p(std::move(table));
    p.AddTerm(SuperMonomial::One(p.table_->num_even()), c);
    return p;
  }

  static SuperPolynomial EvenVar(VarTablePtr table, std::size_t i) {
    if (i >= table->num_even()) {
      throw Error(ErrorKind::kIndexOutOfRange, "even variable " + std::to_string(i));
    }
    SuperPolynomial p(std::move(table));
    SuperMonomial mono = SuperMonomial::One(p.table_->num_even());
    mono.exps[i] = 1;
    p.AddTerm(std::move(mono), Scalar(1));
    return p;
  }

  static SuperPolynomial OddVar(VarTablePtr table, std::size_t j) {
    if (j >= table->num_odd()) {
      throw Error(ErrorKind::kIndexOutOfRange, "odd variable " + std::to_string(j));
    }
    SuperPolynomial p(std::move(table));
    SuperMonomial mono = SuperMonomial::One(p.table_->num_even());
    mono.odd = std::uint64_t{1} << j;
    p.AddTerm(std::move(mono), Scalar(1));
    return p;
  }

  static SuperPolynomial Var(VarTablePtr table, std::string_view name) {
    auto ref = table->Lookup(name);
    return ref.odd ? OddVar(std::move(table), ref.index)
                   : EvenVar(std::move(table), ref.index);
  }

  // coeff * f_1 * f_2 * ... in the written order, brought to canonical form.
  static SuperPolynomial Term(VarTablePtr table, const Scalar& coeff,
                              std::span<const std::string> factors) {
    SuperMonomial mono = SuperMonomial::One(table->num_even());
    int sign = 1;
    for (const auto& name : factors) {
      auto ref = table->Lookup(name);
      if (!ref.odd) {
        ++mono.exps[ref.index];
        continue;
      }
      std::uint64_t bit = std::uint64_t{1} << ref.index;
      if (mono.odd & bit) return SuperPolynomial(std::move(table));
      sign *= KoszulSign(mono.odd, bit);
      mono.odd |= bit;
    }
    SuperPolynomial p(std::move(table));
    p.AddTerm(std::move(mono), sign < 0 ? -coeff : coeff);
    return p;
  }

  const VarTablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Highest total degree, -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  // Lowest total degree, -1 for the zero polynomial.
  int order() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  // 0 or 1 for parity-homogeneous polynomials (zero counts as even),
  // nullopt when both parities occur.
  std::optional<int> parity() const {
    std::optional<int> p;
    for (const auto& [mono, c] : terms_) {
      if (!p) {
        p = mono.parity();
      } else if (*p != mono.parity()) {
        return std::nullopt;
      }
    }
    return p.value_or(0);
  }

  Scalar constant_term() const {
    if (terms_.empty()) return Scalar();
    const auto& [mono, c] = *terms_.begin();
    return mono.degree() == 0 ? c : Scalar();
  }

  Scalar coefficient(const SuperMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void AddTerm(SuperMonomial mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Terms of total degree <= max_degree.
  SuperPolynomial Truncated(int max_degree) const {
    SuperPolynomial out(table_);
    for (const auto& [mono, c] : terms_) {
      if (mono.degree() > max_degree) break;
      out.terms_.emplace_hint(out.terms_.end(), mono, c);
    }
    return out;
  }

  SuperPolynomial operator-() const {
    SuperPolynomial out(table_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono, -c);
    return out;
  }

  SuperPolynomial& operator+=(const SuperPolynomial& o) {
    CheckTable(o);
    for (const auto& [mono, c] : o.terms_) AddTerm(mono, c);
    return *this;
  }
  SuperPolynomial& operator-=(const SuperPolynomial& o) {
    CheckTable(o);
    for (const auto& [mono, c] : o.terms_) AddTerm(mono, -c);
    return *this;
  }
  SuperPolynomial& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
  }

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) {
    return a += b;
  }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) {
    return a -= b;
  }
  friend SuperPolynomial operator*(SuperPolynomial a, const Scalar& s) { return a *= s; }
  friend SuperPolynomial operator*(const Scalar& s, SuperPolynomial a) { return a *= s; }

  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    a.CheckTable(b);
    SuperPolynomial out(a.table_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.odd & mb.odd) continue;
        SuperMonomial mono{ma.exps, ma.odd | mb.odd};
        for (std::size_t i = 0; i < mono.exps.size(); ++i) mono.exps[i] += mb.exps[i];
        Scalar c = ca * cb;
        if (KoszulSign(ma.odd, mb.odd) < 0) c = -c;
        out.AddTerm(std::move(mono), c);
      }
    }
    return out;
  }
  SuperPolynomial& operator*=(const SuperPolynomial& o) { return *this = *this * o; }

  // Product with one monomial, dropping everything above max_degree.
  SuperPolynomial MultiplyTruncated(const SuperMonomial& mono, int max_degree) const {
    SuperPolynomial out(table_);
    int shift = mono.degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() + shift > max_degree) break;
      if (m.odd & mono.odd) continue;
      SuperMonomial prod{mono.exps, mono.odd | m.odd};
      for (std::size_t i = 0; i < prod.exps.size(); ++i) prod.exps[i] += m.exps[i];
      // mono is written on the left.
      out.AddTerm(std::move(prod), KoszulSign(mono.odd, m.odd) < 0 ? -c : c);
    }
    return out;
  }

  SuperPolynomial Pow(unsigned exponent) const {
    SuperPolynomial result = Constant(table_, Scalar(1));
    SuperPolynomial base = *this;
    while (exponent != 0) {
      if (exponent & 1u) result *= base;
      exponent >>= 1;
      if (exponent != 0) base *= base;
    }
    return result;
  }

  // Exact equality; the tables must agree as well.
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    return SameTable(a.table_, b.table_) && a.terms_ == b.terms_;
  }

  // True if a = c * b for some nonzero scalar c.
  bool IsProportionalTo(const SuperPolynomial& b) const {
    if (terms_.size() != b.terms_.size() || terms_.empty()) return false;
    auto ia = terms_.begin();
    auto ib = b.terms_.begin();
    Scalar ratio = ia->second / ib->second;
    for (; ia != terms_.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first) || ia->second != ratio * ib->second) return false;
    }
    return true;
  }

  std::string MonomialString(const SuperMonomial& mono) const {
    std::string out;
    auto append = [&out](const std::string& factor) {
      if (!out.empty()) out += '*';
      out += factor;
    };
    for (std::size_t i = 0; i < mono.exps.size(); ++i) {
      if (mono.exps[i] == 0) continue;
      std::string f = table_->even_name(i);
      if (mono.exps[i] > 1) f += "^" + std::to_string(mono.exps[i]);
      append(f);
    }
    for (std::size_t j = 0; j < table_->num_odd(); ++j) {
      if (mono.odd & (std::uint64_t{1} << j)) append(table_->odd_name(j));
    }
    return out;
  }

  // Highest degree first, in DSL syntax.
  std::string ToString() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [mono, c] = *it;
      bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
      Scalar mag = negative ? -c : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string body = MonomialString(mono);
      if (body.empty()) {
        out += mag.to_string();
      } else if (mag.is_one()) {
        out += body;
      } else {
        out += mag.to_string() + "*" + body;
      }
    }
    return out;
  }

 private:
  void CheckTable(const SuperPolynomial& o) const {
    if (!SameTable(table_, o.table_)) {
      throw Error(ErrorKind::kMixedTables, "operands use different variable tables");
    }
  }

  VarTablePtr table_;
  Terms terms_;
};

// Replace every variable by a polynomial over `target`. `even_images` and
// `odd_images` are indexed like the source table; odd images are multiplied
// in the canonical (ascending) order of each monomial.
inline SuperPolynomial Substitute(const SuperPolynomial& p, const VarTablePtr& target,
                                  std::span<const SuperPolynomial> even_images,
                                  std::span<const SuperPolynomial> odd_images) {
  const VarTable& src = *p.table();
  if (even_images.size() != src.num_even() || odd_images.size() != src.num_odd()) {
    throw Error(ErrorKind::kDimensionMismatch, "substitution arity");
  }
  // powers[i][k] = even_images[i]^k, built lazily.
  std::vector<std::vector<SuperPolynomial>> powers(src.num_even());
  auto power = [&](std::size_t i, std::uint32_t k) -> const SuperPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SuperPolynomial::Constant(target, Scalar(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * even_images[i]);
    return cache[k];
  };
  SuperPolynomial out(target);
  for (const auto& [mono, c] : p.terms()) {
    SuperPolynomial term = SuperPolynomial::Constant(target, c);
    for (std::size_t i = 0; i < mono.exps.size() && !term.is_zero(); ++i) {
      if (mono.exps[i] != 0) term *= power(i, mono.exps[i]);
    }
    for (std::size_t j = 0; j < src.num_odd() && !term.is_zero(); ++j) {
      if (mono.odd & (std::uint64_t{1} << j)) term *= odd_images[j];
    }
    out += term;
  }
  return out;
}

// Value at a closed point: x_i -> a_i and every odd variable -> 0.
inline Scalar Evaluate(const SuperPolynomial& p, const ClosedPoint& point) {
  if (point.size() != p.table()->num_even()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " +
                    std::to_string(p.table()->num_even()));
  }
  Scalar sum;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.odd != 0) continue;
    Scalar term = c;
    for (std::size_t i = 0; i < mono.exps.size() && !term.is_zero(); ++i) {
      for (std::uint32_t k = 0; k < mono.exps[i]; ++k) term *= point.coords[i];
    }
    sum += term;
  }
  return sum;
}

// p(x + a): moves the point to the origin.
inline SuperPolynomial ShiftToOrigin(const SuperPolynomial& p, const ClosedPoint& point) {
  const VarTablePtr& t = p.table();
  if (point.size() != t->num_even()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " +
                    std::to_string(t->num_even()));
  }
  if (point.is_origin()) return p;
  std::vector<SuperPolynomial> evens;
  std::vector<SuperPolynomial> odds;
  for (std::size_t i = 0; i < t->num_even(); ++i) {
    evens.push_back(SuperPolynomial::EvenVar(t, i) + SuperPolynomial::Constant(t, point.coords[i]));
  }
  for (std::size_t j = 0; j < t->num_odd(); ++j) odds.push_back(SuperPolynomial::OddVar(t, j));
  return Substitute(p, t, evens, odds);
}

// C[x, xi] / (f_1..f_p, phi_1..phi_q) with parity-homogeneous generators.
struct Presentation {
  VarTablePtr vars;
  std::vector<SuperPolynomial> even_gens;
  std::vector<SuperPolynomial> odd_gens;

  // Sorts generators by parity (order within each parity is preserved) and
  // validates tables and homogeneity.
  static Presentation Make(VarTablePtr vars, std::span<const SuperPolynomial> gens) {
    Presentation x{std::move(vars), {}, {}};
    for (const auto& g : gens) {
      if (!SameTable(g.table(), x.vars)) {
        throw Error(ErrorKind::kMixedTables, "generator over a foreign variable table");
      }
      auto parity = g.parity();
      if (!parity) {
        throw Error(ErrorKind::kMixedParityGenerator, g.ToString());
      }
      (*parity == 0 ? x.even_gens : x.odd_gens).push_back(g);
    }
    return x;
  }

  std::size_t num_even_vars() const { return vars->num_even(); }
  std::size_t num_odd_vars() const { return vars->num_odd(); }

  // Even generators first, then odd ones; indices in certificates refer to
  // this order.
  std::vector<SuperPolynomial> generators() const {
    std::vector<SuperPolynomial> all = even_gens;
    all.insert(all.end(), odd_gens.begin(), odd_gens.end());
    return all;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& g : even_gens) d = std::max(d, g.degree());
    for (const auto& g : odd_gens) d = std::max(d, g.degree());
    return d;
  }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return SameTable(a.vars, b.vars) && a.even_gens == b.even_gens &&
           a.odd_gens == b.odd_gens;
  }
};

// The classical shadow: odd variables set to 0, odd generators dropped.
inline Presentation ReduceEven(const Presentation& x) {
  VarTablePtr reduced = VarTable::Make(x.vars->even_names(), {});
  std::vector<SuperPolynomial> evens;
  for (std::size_t i = 0; i < reduced->num_even(); ++i) {
    evens.push_back(SuperPolynomial::EvenVar(reduced, i));
  }
  std::vector<SuperPolynomial> odds(x.vars->num_odd(), SuperPolynomial(reduced));
  Presentation out{reduced, {}, {}};
  for (const auto& f : x.even_gens) {
    SuperPolynomial g = Substitute(f, reduced, evens, odds);
    if (!g.is_zero()) out.even_gens.push_back(std::move(g));
  }
  return out;
}

}  // namespace supergeom

#endif  // SUPERGEOM_SUPERPOLY_HPP_
