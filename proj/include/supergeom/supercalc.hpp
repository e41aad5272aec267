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

#ifndef SUPERGEOM_SUPERCALC_HPP_
#define SUPERGEOM_SUPERCALC_HPP_

#include <bit>
#include <cstdint>
#include <string>

#include "supergeom/linalg.hpp"
#include "supergeom/superpoly.hpp"

namespace supergeom {

// Pair of even|odd integers, used both for ranks and for dimensions.
struct SuperDim {
  int even = 0;
  int odd = 0;

  std::string ToString() const { return std::to_string(even) + "|" + std::to_string(odd); }
  friend bool operator==(const SuperDim&, const SuperDim&) = default;
};

using SuperRank = SuperDim;

inline SuperPolynomial PartialEven(const SuperPolynomial& p, std::size_t i) {
  if (i >= p.table()->num_even()) {
    throw Error(ErrorKind::kIndexOutOfRange, "even variable index " + std::to_string(i));
  }
  SuperPolynomial out(p.table());
  for (const auto& [mono, c] : p.terms()) {
    if (mono.exps[i] == 0) continue;
    SuperMonomial d = mono;
    --d.exps[i];
    out.AddTerm(std::move(d), c * Scalar(static_cast<long>(mono.exps[i])));
  }
  return out;
}

// Left derivative: xi_j is first moved to the front of the (ascending) odd
// block, which costs one sign per odd factor with a smaller index.
inline SuperPolynomial PartialOdd(const SuperPolynomial& p, std::size_t j) {
  if (j >= p.table()->num_odd()) {
    throw Error(ErrorKind::kIndexOutOfRange, "odd variable index " + std::to_string(j));
  }
  const std::uint64_t bit = std::uint64_t{1} << j;
  SuperPolynomial out(p.table());
  for (const auto& [mono, c] : p.terms()) {
    if (!(mono.odd & bit)) continue;
    SuperMonomial d = mono;
    d.odd &= ~bit;
    const bool negative = std::popcount(mono.odd & (bit - 1)) & 1;
    out.AddTerm(std::move(d), negative ? -c : c);
  }
  return out;
}

// Jacobian of a presentation at a closed point. Only the diagonal blocks
// carry data; the mixed blocks are odd and vanish at closed points.
struct NumericBlockMatrix {
  DenseMatrix even_block;  // even generators x even variables
  DenseMatrix odd_block;   // odd generators x odd variables
};

inline NumericBlockMatrix JacobianAt(const Presentation& x, const ClosedPoint& point) {
  const std::size_t m = x.num_even_vars(), n = x.num_odd_vars();
  if (point.size() != m) {
    throw Error(ErrorKind::kDimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " +
                    std::to_string(m));
  }
  NumericBlockMatrix jac{DenseMatrix(x.even_gens.size(), m), DenseMatrix(x.odd_gens.size(), n)};
  auto mixed_must_vanish = [&](const SuperPolynomial& d) {
    if (!Evaluate(d, point).is_zero()) {
      throw std::logic_error("odd Jacobian entry has a nonzero value at a closed point");
    }
  };
  for (std::size_t r = 0; r < x.even_gens.size(); ++r) {
    const auto& f = x.even_gens[r];
    for (std::size_t i = 0; i < m; ++i) jac.even_block(r, i) = Evaluate(PartialEven(f, i), point);
    for (std::size_t j = 0; j < n; ++j) mixed_must_vanish(PartialOdd(f, j));
  }
  for (std::size_t r = 0; r < x.odd_gens.size(); ++r) {
    const auto& phi = x.odd_gens[r];
    for (std::size_t j = 0; j < n; ++j) jac.odd_block(r, j) = Evaluate(PartialOdd(phi, j), point);
    for (std::size_t i = 0; i < m; ++i) mixed_must_vanish(PartialEven(phi, i));
  }
  return jac;
}

inline SuperRank ComputeSuperRank(const NumericBlockMatrix& jac) {
  return {static_cast<int>(BareissRank(jac.even_block)),
          static_cast<int>(BareissRank(jac.odd_block))};
}

}  // namespace supergeom

#endif  // SUPERGEOM_SUPERCALC_HPP_
