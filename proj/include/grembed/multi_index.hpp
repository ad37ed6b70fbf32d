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


#ifndef GREMBED_MULTI_INDEX_HPP
#define GREMBED_MULTI_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "grembed/error.hpp"
#include "grembed/polynomial.hpp"

namespace grembed {

/// Basis label e_{i1} ^ ... ^ e_{ir} of an exterior power: strictly
/// increasing, 0-based.
struct WedgeIndex {
  std::vector<std::size_t> entries;

  WedgeIndex() = default;
  WedgeIndex(std::vector<std::size_t> e, std::size_t n) : entries(std::move(e)) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] >= n) throw InvalidArgument("wedge index entry out of range");
      if (i && entries[i] <= entries[i - 1]) throw InvalidArgument("wedge index must be strictly increasing");
    }
  }
  auto operator<=>(const WedgeIndex&) const = default;
};

/// Basis label e_1^{k1} ... e_n^{kn} of a symmetric power: the exponent vector.
struct SymIndex {
  std::vector<std::uint32_t> exponents;

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  bool operator==(const SymIndex&) const = default;
};

/// Basis label e_{i1} (x) ... (x) e_{ir} of a tensor product.
struct TensorIndex {
  std::vector<std::size_t> factors;
  auto operator<=>(const TensorIndex&) const = default;
};

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::size_t binomial_size(std::uint64_t n, std::uint64_t k) {
  Integer b = binomial(n, k);
  if (b > Integer(std::numeric_limits<std::uint32_t>::max())) throw InvalidArgument("dimension too large");
  return static_cast<std::size_t>(b);
}

/// top! / (k_1! ... k_l!), zero as soon as some k_j is negative.
inline Integer multinomial(long long top, std::span<const long long> parts) {
  for (auto k : parts) {
    if (k < 0) return 0;
  }
  if (top < 0) throw InvalidArgument("multinomial: negative top");
  long long sum = 0;
  for (auto k : parts) sum += k;
  if (sum != top) throw InvalidArgument("multinomial: parts do not sum to top");
  Integer r = 1;
  long long placed = 0;
  for (auto k : parts) {
    placed += k;
    r *= binomial(static_cast<std::uint64_t>(placed), static_cast<std::uint64_t>(k));
  }
  return r;
}

inline Integer multinomial(long long top, std::initializer_list<long long> parts) {
  return multinomial(top, std::span<const long long>(parts.begin(), parts.size()));
}

/// Number of m-dimensional subspaces of F_q^n.
inline Integer gaussian_binomial(std::uint64_t n, std::uint64_t m, std::uint64_t q) {
  if (m > n) return 0;
  Integer num = 1, den = 1, qq = q;
  for (std::uint64_t i = 0; i < m; ++i) {
    num *= boost::multiprecision::pow(qq, static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(qq, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

/// Strictly increasing r-tuples from [0, n) in lexicographic order.
inline std::vector<WedgeIndex> wedge_basis(std::size_t n, std::size_t r) {
  std::vector<WedgeIndex> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(WedgeIndex{cur, n});
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Exponent vectors of length n and total degree r, in decreasing lexicographic
/// order: e_1^r first, e_n^r last.
inline std::vector<SymIndex> sym_basis(std::size_t n, std::uint32_t r) {
  std::vector<SymIndex> out;
  if (n == 0) return out;
  std::vector<std::uint32_t> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(SymIndex{cur});
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, r);
  return out;
}

/// Tuples (i_1..i_r) with i_k < dims[k], lexicographic (first factor slowest).
inline std::vector<TensorIndex> tensor_basis(const std::vector<std::size_t>& dims) {
  std::vector<TensorIndex> out;
  if (dims.empty()) return out;
  std::vector<std::size_t> cur(dims.size(), 0);
  for (auto d : dims) {
    if (d == 0) return out;
  }
  while (true) {
    out.push_back(TensorIndex{cur});
    std::size_t k = dims.size();
    while (k > 0 && cur[k - 1] + 1 == dims[k - 1]) cur[--k] = 0;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

}  // namespace grembed

#endif  // GREMBED_MULTI_INDEX_HPP
