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

// Local geometry of an affine supervariety at a closed point P.
//
// Everything is computed after moving P to the origin, in the finite
// dimensional algebra C[x, xi] / M^{N+1} (M the maximal ideal of the
// origin). There the ideal becomes the subspace
//
//   J_N = span{ trunc_N(mu * g) : g a generator, mu a monomial }
//
// and O_{X,P} / m_P^{k+1} = C[x, xi] / (I + M^{k+1}) for every k <= N.
// Columns are ordered by ascending degree, so a single echelon form of J_N
// yields the projections J_k for all k <= N at once: the rank of J_k is the
// number of pivots in columns of degree <= k.

#ifndef SUPERGEOM_LOCALGEOM_HPP_
#define SUPERGEOM_LOCALGEOM_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "supergeom/linalg.hpp"
#include "supergeom/supercalc.hpp"
#include "supergeom/superpoly.hpp"

namespace supergeom {

// All monomials of total degree <= N over m|n variables, indexed in
// MonomialOrder (so by ascending degree).
class MonomialBasis {
 public:
  MonomialBasis(std::size_t num_even, std::size_t num_odd, int max_degree)
      : max_degree_(max_degree) {
    const std::uint64_t subsets = num_odd >= 64 ? 0 : (std::uint64_t{1} << num_odd);
    if (num_odd >= 64) throw Error(ErrorKind::kTooManyOddVariables, "truncation basis");
    SuperMonomial mono = SuperMonomial::One(num_even);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      const int odd_deg = std::popcount(mask);
      if (odd_deg > max_degree) continue;
      mono.odd = mask;
      EnumerateEven(mono, 0, max_degree - odd_deg);
    }
    std::sort(monomials_.begin(), monomials_.end(), MonomialOrder());
    degree_end_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    for (std::size_t c = 0; c < monomials_.size(); ++c) {
      index_.emplace(monomials_[c], c);
      degree_end_[static_cast<std::size_t>(monomials_[c].degree())] = c + 1;
    }
    for (std::size_t k = 1; k < degree_end_.size(); ++k) {
      degree_end_[k] = std::max(degree_end_[k], degree_end_[k - 1]);
    }
  }

  int max_degree() const { return max_degree_; }
  std::size_t size() const { return monomials_.size(); }
  const SuperMonomial& monomial(std::size_t c) const { return monomials_[c]; }
  // Number of monomials of degree <= k.
  std::size_t degree_end(int k) const { return degree_end_[static_cast<std::size_t>(k)]; }

  std::size_t column(const SuperMonomial& mono) const { return index_.at(mono); }

  // Row vector of a polynomial whose degree is at most max_degree().
  SparseRow ToRow(const SuperPolynomial& p) const {
    SparseRow row;
    row.reserve(p.num_terms());
    for (const auto& [mono, c] : p.terms()) row.emplace_back(column(mono), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

 private:
  void EnumerateEven(SuperMonomial& mono, std::size_t var, int budget) {
    if (var == mono.exps.size()) {
      monomials_.push_back(mono);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      mono.exps[var] = static_cast<std::uint32_t>(e);
      EnumerateEven(mono, var + 1, budget - e);
    }
    mono.exps[var] = 0;
  }

  int max_degree_;
  std::vector<SuperMonomial> monomials_;
  std::map<SuperMonomial, std::size_t, MonomialOrder> index_;
  std::vector<std::size_t> degree_end_;
};

// Echelon form of J_N for a set of generators already shifted to the origin.
class TruncatedIdeal {
 public:
  TruncatedIdeal(const MonomialBasis& basis, std::span<const SuperPolynomial> shifted_gens)
      : basis_(&basis) {
    const int n = basis.max_degree();
    for (const auto& g : shifted_gens) {
      if (g.is_zero()) continue;
      const int budget = n - g.order();
      if (budget < 0) continue;
      const std::size_t end = basis.degree_end(budget);
      for (std::size_t c = 0; c < end; ++c) {
        SuperPolynomial row = g.MultiplyTruncated(basis.monomial(c), n);
        if (!row.is_zero()) echelon_.Insert(basis.ToRow(row));
      }
    }
  }

  bool Contains(const SuperPolynomial& shifted) const {
    return echelon_.Contains(basis_->ToRow(shifted.Truncated(basis_->max_degree())));
  }

  const EchelonBasis& echelon() const { return echelon_; }

 private:
  const MonomialBasis* basis_;
  EchelonBasis echelon_;
};

inline bool PointOnVariety(const Presentation& x, const ClosedPoint& point) {
  if (point.size() != x.num_even_vars()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " +
                    std::to_string(x.num_even_vars()));
  }
  return std::all_of(x.even_gens.begin(), x.even_gens.end(),
                     [&](const SuperPolynomial& f) { return Evaluate(f, point).is_zero(); });
}

inline void RequirePointOnVariety(const Presentation& x, const ClosedPoint& point) {
  if (!PointOnVariety(x, point)) {
    throw Error(ErrorKind::kPointNotOnVariety, "an even generator does not vanish at the point");
  }
}

// dim m_P / m_P^2 by parity, from the Jacobian rank.
inline SuperDim TangentDim(const Presentation& x, const ClosedPoint& point) {
  RequirePointOnVariety(x, point);
  SuperRank rank = ComputeSuperRank(JacobianAt(x, point));
  return {static_cast<int>(x.num_even_vars()) - rank.even,
          static_cast<int>(x.num_odd_vars()) - rank.odd};
}

// Model of O_{X,P} / m_P^{k+1} for k = 0..N, by dimension counts.
class TruncatedLocalRing {
 public:
  TruncatedLocalRing(int order, std::vector<int> t_even, std::vector<int> t_odd)
      : order_(order), t_even_(std::move(t_even)), t_odd_(std::move(t_odd)) {}

  int order() const { return order_; }

  // dim C[x, xi] / (I + M^{k+1}); 0 for k = -1.
  int t(int k) const {
    if (k < 0) return 0;
    CheckDegree(k);
    return t_even_[static_cast<std::size_t>(k)] + t_odd_[static_cast<std::size_t>(k)];
  }

  // dim m^d / m^{d+1} split by parity.
  SuperDim HilbertSplit(int d) const {
    CheckDegree(d);
    const auto k = static_cast<std::size_t>(d);
    if (d == 0) return {t_even_[0], t_odd_[0]};
    return {t_even_[k] - t_even_[k - 1], t_odd_[k] - t_odd_[k - 1]};
  }

  int Hilbert(int d) const {
    SuperDim h = HilbertSplit(d);
    return h.even + h.odd;
  }

  std::vector<int> HilbertTable() const {
    std::vector<int> out;
    for (int d = 0; d <= order_; ++d) out.push_back(Hilbert(d));
    return out;
  }

  std::vector<int> TTable() const {
    std::vector<int> out;
    for (int k = 0; k <= order_; ++k) out.push_back(t(k));
    return out;
  }

 private:
  void CheckDegree(int d) const {
    if (d < 0 || d > order_) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "degree " + std::to_string(d) + " outside 0.." + std::to_string(order_));
    }
  }

  int order_;
  std::vector<int> t_even_;
  std::vector<int> t_odd_;
};

inline std::vector<SuperPolynomial> ShiftedGenerators(std::span<const SuperPolynomial> gens,
                                                      const ClosedPoint& point) {
  std::vector<SuperPolynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(ShiftToOrigin(g, point));
  return out;
}

inline TruncatedLocalRing TruncatedQuotient(const Presentation& x, const ClosedPoint& point,
                                            int order) {
  if (order < 1) {
    throw Error(ErrorKind::kOrderTooSmall, "truncation order " + std::to_string(order) + " < 1");
  }
  RequirePointOnVariety(x, point);
  const MonomialBasis basis(x.num_even_vars(), x.num_odd_vars(), order);
  const auto gens = x.generators();
  const TruncatedIdeal ideal(basis, ShiftedGenerators(gens, point));

  // Cumulative counts of monomials and of pivots, per parity, by degree.
  const auto degrees = static_cast<std::size_t>(order) + 1;
  std::vector<int> mono_count[2] = {std::vector<int>(degrees), std::vector<int>(degrees)};
  std::vector<int> pivot_count[2] = {std::vector<int>(degrees), std::vector<int>(degrees)};
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto& mono = basis.monomial(c);
    ++mono_count[mono.parity()][static_cast<std::size_t>(mono.degree())];
  }
  for (const auto& [lead, row] : ideal.echelon().pivots()) {
    const auto& mono = basis.monomial(lead);
    ++pivot_count[mono.parity()][static_cast<std::size_t>(mono.degree())];
  }
  std::vector<int> t[2] = {std::vector<int>(degrees), std::vector<int>(degrees)};
  for (int parity = 0; parity < 2; ++parity) {
    int running = 0;
    for (std::size_t k = 0; k < degrees; ++k) {
      running += mono_count[parity][k] - pivot_count[parity][k];
      t[parity][k] = running;
    }
  }
  return TruncatedLocalRing(order, std::move(t[0]), std::move(t[1]));
}

inline int HilbertFunction(const TruncatedLocalRing& ring, int d) { return ring.Hilbert(d); }

// Number of degree-d monomials in r even and s odd variables.
inline std::int64_t FreeModelHilbert(int r, int s, int d) {
  if (r < 0 || s < 0 || d < 0) throw Error(ErrorKind::kIndexOutOfRange, "negative argument");
  auto binomial = [](std::int64_t n, std::int64_t k) -> std::int64_t {
    if (k < 0 || n < k) return 0;
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
  };
  std::int64_t total = 0;
  for (int j = 0; j <= std::min(d, s); ++j) {
    const int k = d - j;
    // Monomials of degree k in r even variables; r = 0 admits only k = 0.
    const std::int64_t even_count = r == 0 ? (k == 0 ? 1 : 0) : binomial(r + k - 1, k);
    total += binomial(s, j) * even_count;
  }
  return total;
}

// Whether g lies in (selected) + M^{N+1} after moving P to the origin.
inline bool LocalMembership(const SuperPolynomial& g, std::span<const SuperPolynomial> selected,
                            const ClosedPoint& point, int order) {
  if (order < 1) {
    throw Error(ErrorKind::kOrderTooSmall, "truncation order " + std::to_string(order) + " < 1");
  }
  for (const auto& s : selected) {
    if (!SameTable(s.table(), g.table())) {
      throw Error(ErrorKind::kMixedTables, "generators over different tables");
    }
    if (!Evaluate(s, point).is_zero()) {
      throw Error(ErrorKind::kPointNotOnVariety, "a selected generator does not vanish");
    }
  }
  const MonomialBasis basis(g.table()->num_even(), g.table()->num_odd(), order);
  const TruncatedIdeal ideal(basis, ShiftedGenerators(selected, point));
  return ideal.Contains(ShiftToOrigin(g, point));
}

inline SuperDim MinimalGeneratorCount(const TruncatedLocalRing& ring) {
  if (ring.order() < 2) {
    throw Error(ErrorKind::kOrderTooSmall, "minimal generator count needs order >= 2");
  }
  return ring.HilbertSplit(1);
}

enum class Verdict { kSmoothExact, kSmoothToOrder, kNotSmooth };

inline const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kSmoothExact: return "SmoothExact";
    case Verdict::kSmoothToOrder: return "SmoothToOrder";
    case Verdict::kNotSmooth: return "NotSmooth";
  }
  return "?";
}

struct SmoothnessVerdict {
  Verdict verdict = Verdict::kNotSmooth;
  // Candidate dimension r|s = m|n - rank; the dimension of X at P when smooth.
  SuperDim dim;
  SuperDim tangent;
  SuperRank rank;
  int order = 0;
  bool complete_intersection = false;
  // First degree d with h(d) < phi_{r|s}(d).
  std::optional<int> witness_degree;
  // Index (even generators first) of the first generator outside the ideal
  // of the Jacobian-selected generators.
  std::optional<int> failed_generator;
  // h(0..order); left empty on the complete-intersection path.
  std::vector<int> hilbert;

  bool smooth() const { return verdict != Verdict::kNotSmooth; }
};

inline int DefaultOrder(const Presentation& x) {
  return 2 * x.max_degree() + static_cast<int>(x.num_odd_vars()) + 2;
}

inline SmoothnessVerdict SmoothTest(const Presentation& x, const ClosedPoint& point, int order) {
  if (order < 2) {
    throw Error(ErrorKind::kOrderTooSmall, "smoothness test needs order >= 2, got " +
                                               std::to_string(order));
  }
  RequirePointOnVariety(x, point);

  SmoothnessVerdict out;
  out.order = order;
  const NumericBlockMatrix jac = JacobianAt(x, point);
  out.rank = ComputeSuperRank(jac);
  out.tangent = {static_cast<int>(x.num_even_vars()) - out.rank.even,
                 static_cast<int>(x.num_odd_vars()) - out.rank.odd};
  out.dim = out.tangent;

  if (static_cast<int>(x.even_gens.size()) == out.rank.even &&
      static_cast<int>(x.odd_gens.size()) == out.rank.odd) {
    out.verdict = Verdict::kSmoothExact;
    out.complete_intersection = true;
    return out;
  }

  // Generators realizing the rank; every other one must be a local
  // consequence of them.
  const std::vector<std::size_t> even_sel = IndependentRows(jac.even_block);
  const std::vector<std::size_t> odd_sel = IndependentRows(jac.odd_block);
  const auto gens = x.generators();
  std::vector<bool> is_selected(gens.size(), false);
  std::vector<SuperPolynomial> selected;
  for (auto r : even_sel) {
    is_selected[r] = true;
    selected.push_back(gens[r]);
  }
  for (auto r : odd_sel) {
    is_selected[x.even_gens.size() + r] = true;
    selected.push_back(gens[x.even_gens.size() + r]);
  }
  const MonomialBasis basis(x.num_even_vars(), x.num_odd_vars(), order);
  {
    const TruncatedIdeal sel_ideal(basis, ShiftedGenerators(selected, point));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (is_selected[g]) continue;
      if (!sel_ideal.Contains(ShiftToOrigin(gens[g], point))) {
        out.failed_generator = static_cast<int>(g);
        break;
      }
    }
  }

  const TruncatedLocalRing ring = TruncatedQuotient(x, point, order);
  out.hilbert = ring.HilbertTable();
  for (int d = 0; d <= order; ++d) {
    const std::int64_t free = FreeModelHilbert(out.dim.even, out.dim.odd, d);
    const int h = ring.Hilbert(d);
    if (h > free) {
      throw std::logic_error("Hilbert function exceeds the free model in degree " +
                             std::to_string(d));
    }
    if (h < free) {
      out.witness_degree = d;
      break;
    }
  }

  out.verdict = (out.failed_generator || out.witness_degree) ? Verdict::kNotSmooth
                                                             : Verdict::kSmoothToOrder;
  return out;
}

inline SmoothnessVerdict SmoothTest(const Presentation& x, const ClosedPoint& point) {
  return SmoothTest(x, point, DefaultOrder(x));
}

}  // namespace supergeom

#endif  // SUPERGEOM_LOCALGEOM_HPP_
