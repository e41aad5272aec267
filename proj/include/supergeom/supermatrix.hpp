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

#ifndef SUPERGEOM_SUPERMATRIX_HPP_
#define SUPERGEOM_SUPERMATRIX_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "supergeom/linalg.hpp"
#include "supergeom/superpoly.hpp"

namespace supergeom {

// Dense matrix of polynomials over one table.
class PolyMatrix {
 public:
  PolyMatrix(VarTablePtr table, std::size_t rows, std::size_t cols)
      : table_(std::move(table)),
        rows_(rows),
        cols_(cols),
        data_(rows * cols, SuperPolynomial(table_)) {}

  static PolyMatrix Identity(const VarTablePtr& table, std::size_t n) {
    PolyMatrix m(table, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = SuperPolynomial::Constant(table, Scalar(1));
    return m;
  }

  static PolyMatrix FromNumeric(const VarTablePtr& table, const DenseMatrix& d) {
    PolyMatrix m(table, d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) m(i, j) = SuperPolynomial::Constant(table, d(i, j));
    }
    return m;
  }

  const VarTablePtr& table() const { return table_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  SuperPolynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const SuperPolynomial& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const auto& p : data_) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

  // Constant terms.
  DenseMatrix Body() const {
    DenseMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).constant_term();
    }
    return out;
  }

  PolyMatrix Block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    PolyMatrix out(table_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    }
    return out;
  }

  PolyMatrix Transposed() const {
    PolyMatrix out(table_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) {
    CheckSameShape(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
    CheckSameShape(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::kDimensionMismatch, "matrix product");
    PolyMatrix out(a.table_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& lhs = a(i, k);
        if (lhs.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += lhs * b(k, j);
        }
      }
    }
    return out;
  }
  friend PolyMatrix operator*(const SuperPolynomial& s, PolyMatrix a) {
    for (auto& p : a.data_) p = s * p;
    return a;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void CheckSameShape(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw Error(ErrorKind::kDimensionMismatch, "matrix shapes differ");
    }
  }

  VarTablePtr table_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SuperPolynomial> data_;
};

// Determinant of a square matrix with even (hence mutually commuting)
// entries, by Laplace expansion along rows memoized over column subsets.
// Elimination would need exact division, which nilpotent entries rule out.
inline SuperPolynomial EvenDeterminant(const PolyMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::kDimensionMismatch, "determinant of non-square matrix");
  if (n > 20) throw Error(ErrorKind::kDimensionMismatch, "determinant size above 20");
  // minors[mask]: determinant of rows 0..|mask|-1 restricted to columns in mask.
  std::vector<SuperPolynomial> minors(std::size_t{1} << n, SuperPolynomial(a.table()));
  minors[0] = SuperPolynomial::Constant(a.table(), Scalar(1));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    SuperPolynomial sum(a.table());
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j)) || a(row, j).is_zero()) continue;
      const auto& rest = minors[mask & ~(1u << j)];
      if (rest.is_zero()) continue;
      // Column j sits after the columns of `rest` that exceed it.
      const bool negative = std::popcount(mask >> (j + 1)) & 1;
      SuperPolynomial term = a(row, j) * rest;
      if (negative) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    minors[mask] = std::move(sum);
  }
  return minors.back();
}

inline PolyMatrix Adjugate(const PolyMatrix& a) {
  const std::size_t n = a.rows();
  PolyMatrix out(a.table(), n, n);
  if (n == 1) {
    out(0, 0) = SuperPolynomial::Constant(a.table(), Scalar(1));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(a.table(), n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      SuperPolynomial d = EvenDeterminant(minor);
      out(i, j) = ((i + j) & 1) ? -d : d;
    }
  }
  return out;
}

inline void RequireGrassmannConstants(const VarTablePtr& table) {
  if (table->num_even() != 0) {
    throw Error(ErrorKind::kUndecidableUnits,
                "unit test needs entries in a Grassmann algebra (no even variables)");
  }
}

// Inverse of a matrix over a Grassmann algebra with invertible body B:
// A = B (1 + B^-1 N), and B^-1 N is nilpotent, so the Neumann series ends.
inline PolyMatrix GrassmannInverse(const PolyMatrix& a) {
  RequireGrassmannConstants(a.table());
  const DenseMatrix body = a.Body();
  const PolyMatrix body_inv = PolyMatrix::FromNumeric(a.table(), Inverse(body));
  const PolyMatrix nil = a - PolyMatrix::FromNumeric(a.table(), body);
  const PolyMatrix step = PolyMatrix::FromNumeric(a.table(), DenseMatrix(a.rows(), a.rows())) -
                          body_inv * nil;  // -B^-1 N
  PolyMatrix power = PolyMatrix::Identity(a.table(), a.rows());
  PolyMatrix sum = power;
  for (std::size_t k = 0; k < a.table()->num_odd(); ++k) {
    power = power * step;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum * body_inv;
}

// Inverse of a single even element with nonzero constant term.
inline SuperPolynomial GrassmannInverse(const SuperPolynomial& p) {
  PolyMatrix m(p.table(), 1, 1);
  m(0, 0) = p;
  return GrassmannInverse(m)(0, 0);
}

// Block matrix [[p, q], [r, s]] over a superalgebra: p (m x m) and s (n x n)
// have even entries, q (m x n) and r (n x m) odd entries.
class SuperMatrix {
 public:
  SuperMatrix(std::size_t m, std::size_t n, PolyMatrix entries)
      : m_(m), n_(n), entries_(std::move(entries)) {
    if (entries_.rows() != m + n || entries_.cols() != m + n) {
      throw Error(ErrorKind::kDimensionMismatch, "entries do not match block sizes");
    }
    for (std::size_t i = 0; i < m + n; ++i) {
      for (std::size_t j = 0; j < m + n; ++j) {
        const int want = ((i < m) != (j < m)) ? 1 : 0;
        auto parity = entries_(i, j).parity();
        if (!entries_(i, j).is_zero() && (!parity || *parity != want)) {
          throw Error(ErrorKind::kMixedParityGenerator,
                      "entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be " +
                          (want ? "odd" : "even"));
        }
      }
    }
  }

  static SuperMatrix FromBlocks(const PolyMatrix& p, const PolyMatrix& q, const PolyMatrix& r,
                                const PolyMatrix& s) {
    const std::size_t m = p.rows(), n = s.rows();
    if (q.rows() != m || q.cols() != n || r.rows() != n || r.cols() != m || p.cols() != m ||
        s.cols() != n) {
      throw Error(ErrorKind::kDimensionMismatch, "block shapes");
    }
    PolyMatrix all(p.table(), m + n, m + n);
    for (std::size_t i = 0; i < m + n; ++i) {
      for (std::size_t j = 0; j < m + n; ++j) {
        if (i < m) {
          all(i, j) = j < m ? p(i, j) : q(i, j - m);
        } else {
          all(i, j) = j < m ? r(i - m, j) : s(i - m, j - m);
        }
      }
    }
    return SuperMatrix(m, n, std::move(all));
  }

  static SuperMatrix Identity(const VarTablePtr& table, std::size_t m, std::size_t n) {
    return SuperMatrix(m, n, PolyMatrix::Identity(table, m + n));
  }

  std::size_t even_dim() const { return m_; }
  std::size_t odd_dim() const { return n_; }
  const VarTablePtr& table() const { return entries_.table(); }
  const PolyMatrix& entries() const { return entries_; }
  const SuperPolynomial& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  PolyMatrix p() const { return entries_.Block(0, 0, m_, m_); }
  PolyMatrix q() const { return entries_.Block(0, m_, m_, n_); }
  PolyMatrix r() const { return entries_.Block(m_, 0, n_, m_); }
  PolyMatrix s() const { return entries_.Block(m_, m_, n_, n_); }

  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  PolyMatrix entries_;
};

inline SuperMatrix MatMul(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.even_dim() != b.even_dim() || a.odd_dim() != b.odd_dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "supermatrix dimensions differ");
  }
  if (!SameTable(a.table(), b.table())) {
    throw Error(ErrorKind::kMixedTables, "supermatrices over different tables");
  }
  return SuperMatrix(a.even_dim(), a.odd_dim(), a.entries() * b.entries());
}

// [[p, q], [r, s]]^st = [[p^T, r^T], [-q^T, s^T]], so (AB)^st = B^st A^st.
inline SuperMatrix Supertranspose(const SuperMatrix& a) {
  const PolyMatrix zero_q(a.table(), a.odd_dim(), a.even_dim());
  return SuperMatrix::FromBlocks(a.p().Transposed(), a.r().Transposed(),
                                 zero_q - a.q().Transposed(), a.s().Transposed());
}

inline bool IsInvertible(const SuperMatrix& a) {
  RequireGrassmannConstants(a.table());
  return !BareissDeterminant(a.p().Body()).is_zero() &&
         !BareissDeterminant(a.s().Body()).is_zero();
}

inline SuperMatrix Inverse(const SuperMatrix& a) {
  if (!IsInvertible(a)) throw Error(ErrorKind::kNotInvertible, "singular body");
  // The body is block diagonal, so the full matrix has an invertible body.
  return SuperMatrix(a.even_dim(), a.odd_dim(), GrassmannInverse(a.entries()));
}

// Ber = det(p - q s^-1 r) det(s^-1).
inline SuperPolynomial Berezinian(const SuperMatrix& a) {
  RequireGrassmannConstants(a.table());
  if (BareissDeterminant(a.s().Body()).is_zero()) {
    throw Error(ErrorKind::kNotInvertible, "s block has a singular body");
  }
  if (a.odd_dim() == 0) return EvenDeterminant(a.p());
  const PolyMatrix s_inv = GrassmannInverse(a.s());
  const PolyMatrix schur = a.p() - a.q() * s_inv * a.r();
  return EvenDeterminant(schur) * EvenDeterminant(s_inv);
}

}  // namespace supergeom

#endif  // SUPERGEOM_SUPERMATRIX_HPP_
