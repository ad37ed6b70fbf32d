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


// Independent brute-force oracles used to freeze and cross-check expected
// values. Nothing here calls the library's determinant, normal form, power
// or enumeration routines.

#ifndef GREMBED_TESTS_ORACLES_HPP
#define GREMBED_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grembed/matrix.hpp"
#include "grembed/ring.hpp"

namespace oracle {

using grembed::Matrix;
using grembed::Ring;
using grembed::RingValue;

/// Laplace expansion along the first row.
inline RingValue cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  RingValue acc = m.ring().zero();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<RingValue> e;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) e.push_back(m(i, k));
      }
    }
    RingValue term = m(0, j) * cofactor_det(Matrix(m.ring(), n - 1, n - 1, std::move(e)));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline RingValue cofactor_minor(const Matrix& m, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) {
  std::vector<RingValue> e;
  for (auto i : rows) {
    for (auto j : cols) e.push_back(m(i, j));
  }
  return cofactor_det(Matrix(m.ring(), rows.size(), cols.size(), std::move(e)));
}

/// All k-subsets of [0, n) in lexicographic order, by bitmask scan.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Compound matrix from cofactor minors.
inline Matrix compound(const Matrix& m, std::size_t r) {
  auto rs = subsets(m.rows(), r);
  auto cs = subsets(m.cols(), r);
  std::vector<RingValue> e;
  for (const auto& I : rs) {
    for (const auto& J : cs) e.push_back(cofactor_minor(m, I, J));
  }
  return Matrix(m.ring(), rs.size(), cs.size(), std::move(e));
}

/// Exponent vectors of degree r in n variables, e_1^r first.
inline std::vector<std::vector<std::uint32_t>> monomials(std::size_t n, std::uint32_t r) {
  std::vector<std::vector<std::uint32_t>> out;
  // Enumerate all n^r index sequences and keep sorted multisets; slow but direct.
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::size_t> seq(r, 0);
  while (true) {
    std::vector<std::uint32_t> ex(n, 0);
    for (auto i : seq) ++ex[i];
    seen.insert(ex);
    std::size_t k = r;
    while (k > 0 && seq[k - 1] + 1 == n) seq[--k] = 0;
    if (k == 0) break;
    ++seq[k - 1];
  }
  out.assign(seen.rbegin(), seen.rend());
  return out;
}

/// Sym^r of m by expanding the product of r linear forms over all n^r index
/// sequences.
inline Matrix sym_power(const Matrix& m, std::uint32_t r) {
  const std::size_t n = m.rows();
  auto rows = monomials(n, r);
  auto cols = monomials(m.cols(), r);
  std::map<std::vector<std::uint32_t>, std::size_t> pos;
  for (std::size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = i;
  std::vector<RingValue> e(rows.size() * cols.size(), m.ring().zero());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> forms;
    for (std::size_t k = 0; k < cols[j].size(); ++k) forms.insert(forms.end(), cols[j][k], k);
    std::vector<std::size_t> seq(r, 0);
    while (true) {
      RingValue w = m.ring().one();
      std::vector<std::uint32_t> ex(n, 0);
      for (std::size_t t = 0; t < r; ++t) {
        w = w * m(seq[t], forms[t]);
        ++ex[seq[t]];
      }
      auto& slot = e[pos[ex] * cols.size() + j];
      slot = slot + w;
      std::size_t k = r;
      while (k > 0 && seq[k - 1] + 1 == n) seq[--k] = 0;
      if (k == 0) break;
      ++seq[k - 1];
    }
  }
  return Matrix(m.ring(), rows.size(), cols.size(), std::move(e));
}

/// Every n x m matrix over a finite ring.
inline std::vector<Matrix> all_matrices(const Ring& ring, std::size_t n, std::size_t m) {
  const auto elems = grembed::enumerate_ring(ring);
  std::vector<Matrix> out;
  std::vector<std::size_t> digits(n * m, 0);
  while (true) {
    std::vector<RingValue> e;
    for (auto d : digits) e.push_back(elems[d]);
    out.emplace_back(ring, n, m, std::move(e));
    std::size_t k = digits.size();
    while (k > 0 && digits[k - 1] + 1 == elems.size()) digits[--k] = 0;
    if (k == 0) break;
    ++digits[k - 1];
  }
  return out;
}

/// Set of all vectors in the column span over a finite ring, as strings.
inline std::set<std::string> span_set(const Matrix& m) {
  const auto elems = grembed::enumerate_ring(m.ring());
  std::set<std::string> out;
  std::vector<std::size_t> coeff(m.cols(), 0);
  while (true) {
    std::string key;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      RingValue v = m.ring().zero();
      for (std::size_t j = 0; j < m.cols(); ++j) v = v + elems[coeff[j]] * m(i, j);
      key += v.to_string() + ",";
    }
    out.insert(key);
    std::size_t k = coeff.size();
    while (k > 0 && coeff[k - 1] + 1 == elems.size()) coeff[--k] = 0;
    if (k == 0) break;
    ++coeff[k - 1];
  }
  return out;
}

/// True when some maximal minor (cofactor) of an n x m matrix is a unit.
inline bool has_unit_maximal_minor(const Matrix& m) {
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  for (const auto& I : subsets(m.rows(), m.cols())) {
    if (grembed::is_unit(cofactor_minor(m, I, cols))) return true;
  }
  return false;
}

/// Number of distinct free rank-m column spans in R^n, by enumerating every
/// matrix and deduplicating the set of span vectors.
inline std::size_t grassmannian_size(const Ring& ring, std::size_t n, std::size_t m) {
  std::set<std::set<std::string>> spans;
  for (const auto& a : all_matrices(ring, n, m)) {
    if (has_unit_maximal_minor(a)) spans.insert(span_set(a));
  }
  return spans.size();
}

/// Distinct arrangements of a multiset, counted with next_permutation.
inline std::uint64_t arrangements(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  std::uint64_t count = 0;
  do {
    ++count;
  } while (std::next_permutation(items.begin(), items.end()));
  return count;
}

}  // namespace oracle

#endif  // GREMBED_TESTS_ORACLES_HPP
