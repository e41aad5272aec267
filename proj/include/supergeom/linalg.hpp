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

// Exact linear algebra over Q(i): dense matrices with fraction-free
// (Bareiss) rank, and an incremental sparse row-echelon basis used for the
// truncated quotient rings.

#ifndef SUPERGEOM_LINALG_HPP_
#define SUPERGEOM_LINALG_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "supergeom/error.hpp"
#include "supergeom/scalar.hpp"

namespace supergeom {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix Identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& s : data_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::kDimensionMismatch, "matrix product");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

// Rank by Bareiss elimination. Every division is by the previous pivot and is
// exact, so no pivot threshold is involved.
inline std::size_t BareissRank(DenseMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Scalar prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(rank, c));
    }
    const Scalar p = m(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Scalar f = m(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        m(r, c) = (p * m(r, c) - f * m(rank, c)) / prev;
      }
      m(r, col) = Scalar();
    }
    prev = p;
    ++rank;
  }
  return rank;
}

// Determinant by Bareiss elimination; the last pivot is the determinant.
inline Scalar BareissDeterminant(DenseMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::kDimensionMismatch, "determinant of non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Scalar();
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(k, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m(r, c) = (m(k, k) * m(r, c) - m(r, k) * m(k, c)) / prev;
      }
      m(r, k) = Scalar();
    }
    prev = m(k, k);
  }
  return sign < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// Gauss-Jordan inverse; throws NotInvertible on a singular matrix.
inline DenseMatrix Inverse(DenseMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::kDimensionMismatch, "inverse of non-square matrix");
  DenseMatrix inv = DenseMatrix::Identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorKind::kNotInvertible, "singular matrix");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(m(pivot, c), m(k, c));
      std::swap(inv(pivot, c), inv(k, c));
    }
    const Scalar scale = m(k, k).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      m(k, c) *= scale;
      inv(k, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || m(r, k).is_zero()) continue;
      const Scalar f = m(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

// Indices of rows that are independent of all earlier rows: the rows chosen
// as pivots when eliminating top to bottom.
inline std::vector<std::size_t> IndependentRows(const DenseMatrix& m) {
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Scalar>> basis;  // reduced rows
  std::vector<std::size_t> lead;           // leading column per basis row
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Scalar> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (row[lead[b]].is_zero()) continue;
      const Scalar f = row[lead[b]];
      for (std::size_t c = 0; c < m.cols(); ++c) row[c] -= f * basis[b][c];
    }
    std::size_t c = 0;
    while (c < m.cols() && row[c].is_zero()) ++c;
    if (c == m.cols()) continue;
    const Scalar scale = row[c].inverse();
    for (auto& s : row) s *= scale;
    // Keep the basis fully reduced in column c.
    for (auto& other : basis) {
      if (other[c].is_zero()) continue;
      const Scalar f = other[c];
      for (std::size_t k = 0; k < m.cols(); ++k) other[k] -= f * row[k];
    }
    basis.push_back(std::move(row));
    lead.push_back(c);
    chosen.push_back(r);
  }
  return chosen;
}

// Sparse row: (column, value) pairs with strictly increasing columns and no
// zero values.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// row <- row - factor * pivot
inline SparseRow SparseAxpy(const SparseRow& row, const Scalar& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -(factor * b->second));
      ++b;
    } else {
      Scalar v = a->second - factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

// Row-echelon basis of a growing subspace of Q(i)^cols, keyed by leading
// column. Rows are normalized to a leading coefficient of 1.
class EchelonBasis {
 public:
  // Reduces the row against the basis; returns true (and stores it) if it
  // was independent.
  bool Insert(SparseRow row) {
    row = Reduce(std::move(row));
    if (row.empty()) return false;
    const Scalar scale = row.front().second.inverse();
    for (auto& [c, v] : row) v *= scale;
    const std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  bool Contains(SparseRow row) const { return Reduce(std::move(row)).empty(); }

  std::size_t rank() const { return pivots_.size(); }

  const std::map<std::size_t, SparseRow>& pivots() const { return pivots_; }

  // Eliminates leading entries for as long as a matching pivot exists. The
  // result is empty iff the row lies in the span.
  SparseRow Reduce(SparseRow row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      const Scalar f = row.front().second;
      row = SparseAxpy(row, f, it->second);
    }
    return row;
  }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace supergeom

#endif  // SUPERGEOM_LINALG_HPP_
