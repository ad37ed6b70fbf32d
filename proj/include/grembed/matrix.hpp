/*
   Copyright 2026 The grembed Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef GREMBED_MATRIX_HPP
#define GREMBED_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grembed/error.hpp"
#include "grembed/ring.hpp"

namespace grembed {

/// Dense row-major matrix over a single ring.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
    entries_.assign(rows * cols, ring_.zero());
  }

  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<RingValue> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) throw DimensionMismatch("entry count does not match rows*cols");
    for (const auto& e : entries_) {
      if (!(e.ring() == ring_)) throw RingMismatch("matrix entry outside " + ring_.to_string());
    }
  }

  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = ring.one();
    return m;
  }

  /// Convenience constructor from small integers, mapped into the ring.
  static Matrix from_ints(const Ring& ring, const std::vector<std::vector<long long>>& rows) {
    if (rows.empty() || rows[0].empty()) throw InvalidArgument("matrix dimensions must be positive");
    std::vector<RingValue> entries;
    for (const auto& row : rows) {
      if (row.size() != rows[0].size()) throw DimensionMismatch("ragged rows");
      for (auto v : row) entries.push_back(ring.from_int(v));
    }
    return Matrix(ring, rows.size(), rows[0].size(), std::move(entries));
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<RingValue>& entries() const { return entries_; }

  const RingValue& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const RingValue& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw InvalidArgument("matrix index out of range");
    return entries_[i * cols_ + j];
  }

  void set(std::size_t i, std::size_t j, RingValue v) {
    if (i >= rows_ || j >= cols_) throw InvalidArgument("matrix index out of range");
    if (!(v.ring() == ring_)) throw RingMismatch("matrix entry outside " + ring_.to_string());
    entries_[i * cols_ + j] = std::move(v);
  }

  Matrix submatrix(const std::vector<std::size_t>& row_sel, const std::vector<std::size_t>& col_sel) const {
    std::vector<RingValue> e;
    e.reserve(row_sel.size() * col_sel.size());
    for (auto i : row_sel) {
      for (auto j : col_sel) e.push_back(at(i, j));
    }
    return Matrix(ring_, row_sel.size(), col_sel.size(), std::move(e));
  }

  Matrix column(std::size_t j) const {
    std::vector<std::size_t> all(rows_);
    for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
    return submatrix(all, {j});
  }

  Matrix transpose() const {
    std::vector<RingValue> e;
    e.reserve(entries_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) e.push_back((*this)(i, j));
    }
    return Matrix(ring_, cols_, rows_, std::move(e));
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  // Used by kernels that fill entries themselves.
  friend Matrix matmul(const Matrix&, const Matrix&);

  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingValue> entries_;
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("matmul: ring mismatch");
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
  Matrix c(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      RingValue acc = a.ring().zero();
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc = acc + a(i, k) * b(k, j);
      }
      c.entries_[i * c.cols() + j] = std::move(acc);
    }
  }
  return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

namespace detail {

inline void require_square(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
}

}  // namespace detail

/// Fraction-free Gaussian elimination. Requires an integral domain, since
/// every division is an exact division by a previous pivot.
inline RingValue determinant_bareiss(const Matrix& m) {
  detail::require_square(m);
  const Ring& ring = m.ring();
  if (!ring.is_integral_domain()) throw InvalidArgument("Bareiss elimination needs an integral domain");
  const std::size_t n = m.rows();
  std::vector<RingValue> a = m.entries();
  auto at = [&](std::size_t i, std::size_t j) -> RingValue& { return a[i * n + j]; };
  bool negate = false;
  RingValue prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return ring.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = exact_quotient(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
      }
    }
    prev = at(k, k);
  }
  RingValue det = at(n - 1, n - 1);
  return negate ? -det : det;
}

/// Division-free determinant over any commutative ring, summing weighted
/// closed-walk sequences ("clows") with a dynamic program in O(n^4) ring
/// operations.
inline RingValue determinant_division_free(const Matrix& m) {
  detail::require_square(m);
  const Ring& ring = m.ring();
  const std::size_t n = m.rows();
  // state[parity][head][vertex]: total weight of partial clow sequences whose
  // open clow starts at `head` and currently sits at `vertex`; parity counts
  // clows including the open one.
  using Table = std::vector<std::vector<std::vector<RingValue>>>;
  auto fresh = [&] { return Table(2, std::vector<std::vector<RingValue>>(n, std::vector<RingValue>(n, ring.zero()))); };
  Table cur = fresh();
  for (std::size_t h = 0; h < n; ++h) cur[1][h][h] = ring.one();
  RingValue det = ring.zero();
  for (std::size_t len = 0; len < n; ++len) {
    const bool last = len + 1 == n;
    Table next = fresh();
    for (int parity = 0; parity < 2; ++parity) {
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t v = h; v < n; ++v) {
          const RingValue& w = cur[parity][h][v];
          if (w.is_zero()) continue;
          const RingValue& back = m(v, h);
          if (last) {
            // Close the final clow; sign is (-1)^(n + #clows).
            if (back.is_zero()) continue;
            RingValue term = w * back;
            det = ((n + parity) % 2 == 0) ? det + term : det - term;
            continue;
          }
          for (std::size_t u = h + 1; u < n; ++u) {
            if (m(v, u).is_zero()) continue;
            next[parity][h][u] = next[parity][h][u] + w * m(v, u);
          }
          if (!back.is_zero()) {
            RingValue closed = w * back;
            for (std::size_t h2 = h + 1; h2 < n; ++h2) {
              next[parity ^ 1][h2][h2] = next[parity ^ 1][h2][h2] + closed;
            }
          }
        }
      }
    }
    if (!last) cur = std::move(next);
  }
  return det;
}

/// Division-free Laplace expansion memoized over column subsets: O(2^n n)
/// ring operations, each multiplying a single matrix entry by a minor.
/// Efficient when entries are sparse polynomials and n is small.
inline RingValue determinant_by_minors(const Matrix& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n > 24) throw InvalidArgument("minor expansion limited to n <= 24");
  const Ring& ring = m.ring();
  // minors[S] = det of rows 0..|S|-1 restricted to column set S.
  std::vector<RingValue> minors(std::size_t{1} << n, ring.zero());
  minors[0] = ring.one();
  for (std::size_t set = 1; set < minors.size(); ++set) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(set)) - 1;
    RingValue acc = ring.zero();
    std::size_t position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(set >> j & 1)) continue;
      const RingValue& sub = minors[set & ~(std::size_t{1} << j)];
      if (!m(row, j).is_zero() && !sub.is_zero()) {
        RingValue term = m(row, j) * sub;
        acc = ((row + position) % 2 == 0) ? acc + term : acc - term;
      }
      ++position;
    }
    minors[set] = std::move(acc);
  }
  return minors.back();
}

/// Exact determinant over any supported ring: Bareiss over the integral
/// domains Z, Q, F_p and Z[x..]; the clow-sequence scheme over F_p[e], where
/// non-units cannot be divided by.
inline RingValue determinant(const Matrix& m) {
  detail::require_square(m);
  if (m.ring().kind() == RingKind::DualNumbers) return determinant_division_free(m);
  return determinant_bareiss(m);
}

inline RingValue minor(const Matrix& m, const std::vector<std::size_t>& row_sel,
                       const std::vector<std::size_t>& col_sel) {
  if (row_sel.size() != col_sel.size()) throw DimensionMismatch("minor: selection sizes differ");
  for (auto i : row_sel) {
    if (i >= m.rows()) throw InvalidArgument("minor: row index out of range");
  }
  for (auto j : col_sel) {
    if (j >= m.cols()) throw InvalidArgument("minor: column index out of range");
  }
  if (row_sel.empty()) return m.ring().one();
  return determinant(m.submatrix(row_sel, col_sel));
}

inline bool is_invertible(const Matrix& m) { return m.is_square() && is_unit(determinant(m)); }

/// Inverse of a square matrix over a field or local ring, by Gauss-Jordan
/// elimination on unit pivots. Throws NotAUnit when no unit pivot exists.
inline Matrix inverse(const Matrix& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  const Ring& ring = m.ring();
  std::vector<std::vector<RingValue>> a(n, std::vector<RingValue>(2 * n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = ring.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !is_unit(a[pivot][c])) ++pivot;
    if (pivot == n) throw NotAUnit("matrix is not invertible over " + ring.to_string());
    std::swap(a[c], a[pivot]);
    RingValue scale = grembed::inverse(a[c][c]);
    for (auto& v : a[c]) v = v * scale;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      RingValue f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  std::vector<RingValue> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.push_back(a[i][n + j]);
  }
  return Matrix(ring, n, n, std::move(e));
}

/// Lexicographically first set of rows whose maximal minor is a unit.
/// Over a field this is the pivot row set of the column echelon form; over a
/// local ring it is found by elimination on unit pivots, which agrees with
/// the residue-field computation. Returns fewer than cols() rows when the
/// span is not a free direct summand of rank cols().
inline std::vector<std::size_t> unit_minor_rows(const Matrix& m) {
  const Ring& ring = m.ring();
  if (!ring.is_field() && ring.kind() != RingKind::DualNumbers) {
    throw InvalidArgument("span normal forms need a field or dual numbers, got " + ring.to_string());
  }
  const std::size_t k = m.cols();
  struct Pivot {
    std::vector<RingValue> row;
    std::size_t col;
    RingValue inv;
  };
  std::vector<Pivot> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m.rows() && chosen.size() < k; ++i) {
    std::vector<RingValue> v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = m(i, j);
    for (const auto& p : pivots) {
      if (v[p.col].is_zero()) continue;
      RingValue f = v[p.col] * p.inv;
      for (std::size_t j = 0; j < k; ++j) v[j] = v[j] - f * p.row[j];
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (is_unit(v[j])) {
        RingValue inv = grembed::inverse(v[j]);
        pivots.push_back({std::move(v), j, std::move(inv)});
        chosen.push_back(i);
        break;
      }
    }
  }
  return chosen;
}

/// Canonical basis of the column span: the unique basis whose rows on the
/// lexicographically first unit-minor row set form the identity. Over a
/// field this is the reduced column echelon form.
inline Matrix column_span_normal_form(const Matrix& m) {
  if (m.cols() > m.rows()) throw NotFreeSpan("more columns than rows");
  auto rows = unit_minor_rows(m);
  if (rows.size() < m.cols()) {
    throw NotFreeSpan("column span is not free of rank " + std::to_string(m.cols()) + " over " +
                      m.ring().to_string());
  }
  std::vector<std::size_t> all(m.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return matmul(m, inverse(m.submatrix(rows, all)));
}

inline bool is_normal_form(const Matrix& m) {
  try {
    return column_span_normal_form(m) == m;
  } catch (const NotFreeSpan&) {
    return false;
  }
}

inline bool spans_equal(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("spans_equal: ring mismatch");
  if (a.rows() != b.rows()) throw DimensionMismatch("spans_equal: ambient dimensions differ");
  // Spans of different free ranks never agree, but both must be valid.
  return column_span_normal_form(a) == column_span_normal_form(b);
}

}  // namespace grembed

#endif  // GREMBED_MATRIX_HPP
