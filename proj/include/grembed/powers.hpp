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


#ifndef GREMBED_POWERS_HPP
#define GREMBED_POWERS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "grembed/error.hpp"
#include "grembed/matrix.hpp"
#include "grembed/multi_index.hpp"
#include "grembed/report.hpp"

namespace grembed {

/// Matrix of M_1 (x) ... (x) M_r in lexicographically ordered tensor bases
/// (first factor varies slowest).
inline Matrix kronecker(const std::vector<Matrix>& ms) {
  if (ms.empty()) throw InvalidArgument("kronecker of an empty list");
  Matrix acc = ms.front();
  for (std::size_t f = 1; f < ms.size(); ++f) {
    const Matrix& b = ms[f];
    if (!(b.ring() == acc.ring())) throw RingMismatch("kronecker: ring mismatch");
    std::vector<RingValue> e;
    e.reserve(acc.rows() * b.rows() * acc.cols() * b.cols());
    for (std::size_t i = 0; i < acc.rows(); ++i) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t j = 0; j < acc.cols(); ++j) {
          for (std::size_t l = 0; l < b.cols(); ++l) e.push_back(acc(i, j) * b(k, l));
        }
      }
    }
    acc = Matrix(acc.ring(), acc.rows() * b.rows(), acc.cols() * b.cols(), std::move(e));
  }
  return acc;
}

/// r-th compound matrix: entry (I, J) is the minor on rows I and columns J,
/// both indexed by lexicographically ordered wedge bases.
inline Matrix compound(const Matrix& m, std::size_t r) {
  if (r == 0 || r > std::min(m.rows(), m.cols())) throw InvalidArgument("compound: r out of range");
  const auto row_basis = wedge_basis(m.rows(), r);
  const auto col_basis = wedge_basis(m.cols(), r);
  std::vector<RingValue> e;
  e.reserve(row_basis.size() * col_basis.size());
  for (const auto& I : row_basis) {
    for (const auto& J : col_basis) e.push_back(minor(m, I.entries, J.entries));
  }
  return Matrix(m.ring(), row_basis.size(), col_basis.size(), std::move(e));
}

/// Matrix of Sym^r of the linear map m. Column J is the expansion of
/// prod_k (column k of m)^{J_k} in the target monomial basis; no divided
/// powers, so multinomial coefficients appear in the entries. Both bases
/// follow sym_basis order.
inline Matrix sym_power(const Matrix& m, std::uint32_t r) {
  if (r == 0) throw InvalidArgument("sym_power: r must be positive");
  const Ring& ring = m.ring();
  const std::size_t n = m.rows();
  const auto row_basis = sym_basis(n, r);
  const auto col_basis = sym_basis(m.cols(), r);
  std::map<std::vector<std::uint32_t>, std::size_t> position;
  for (std::size_t i = 0; i < row_basis.size(); ++i) position.emplace(row_basis[i].exponents, i);

  using Form = std::map<std::vector<std::uint32_t>, RingValue>;
  auto times_column = [&](const Form& f, std::size_t col) {
    Form out;
    for (const auto& [mono, c] : f) {
      for (std::size_t i = 0; i < n; ++i) {
        if (m(i, col).is_zero()) continue;
        auto next = mono;
        ++next[i];
        RingValue term = c * m(i, col);
        auto [it, inserted] = out.try_emplace(std::move(next), term);
        if (!inserted) it->second = it->second + term;
      }
    }
    return out;
  };

  Matrix result(ring, row_basis.size(), col_basis.size());
  for (std::size_t j = 0; j < col_basis.size(); ++j) {
    Form f;
    f.emplace(std::vector<std::uint32_t>(n, 0), ring.one());
    const auto& exps = col_basis[j].exponents;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      for (std::uint32_t t = 0; t < exps[k]; ++t) f = times_column(f, k);
    }
    for (const auto& [mono, c] : f) result.set(position.at(mono), j, c);
  }
  return result;
}

namespace detail {

inline void require_all_square(const std::vector<Matrix>& ms) {
  if (ms.empty()) throw InvalidArgument("identity check needs at least one matrix");
  for (const auto& m : ms) {
    if (!m.is_square()) throw DimensionMismatch("identity check needs square matrices");
    if (!(m.ring() == ms.front().ring())) throw RingMismatch("identity check: ring mismatch");
  }
}

inline CheckReport identity_report(const char* name, const Ring& ring,
                                   std::map<std::string, long long> params, const RingValue& lhs,
                                   const RingValue& rhs, const std::vector<Matrix>& inputs,
                                   std::chrono::steady_clock::time_point start) {
  CheckReport rep;
  rep.name = name;
  rep.ring = ring;
  rep.parameters = std::move(params);
  rep.cases_checked = 1;
  if (!(lhs == rhs)) {
    Json mats = Json::array();
    for (const auto& m : inputs) mats.push_back(to_json(m));
    rep.failures.push_back({{"matrices", mats}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
  }
  rep.elapsed = std::chrono::steady_clock::now() - start;
  rep.finalize();
  return rep;
}

}  // namespace detail

/// det(M_1 (x) ... (x) M_r) == prod_i det(M_i)^(N / n_i), N = prod_j n_j.
inline CheckReport check_det_tensor_identity(const std::vector<Matrix>& ms) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_all_square(ms);
  std::uint64_t total = 1;
  for (const auto& m : ms) total *= m.rows();
  const Ring& ring = ms.front().ring();
  RingValue lhs = determinant(kronecker(ms));
  RingValue rhs = ring.one();
  for (const auto& m : ms) rhs = rhs * pow(determinant(m), total / m.rows());
  std::map<std::string, long long> params{{"factors", static_cast<long long>(ms.size())}};
  for (std::size_t i = 0; i < ms.size(); ++i) params["n" + std::to_string(i + 1)] = static_cast<long long>(ms[i].rows());
  return detail::identity_report("det-tensor-identity", ring, std::move(params), lhs, rhs, ms, start);
}

/// det(Sym^d M) == det(M)^binom(n+d-1, d-1).
inline CheckReport check_det_sym_identity(const Matrix& m, std::uint32_t d) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_all_square({m});
  if (d == 0) throw InvalidArgument("d must be positive");
  const std::uint64_t n = m.rows();
  RingValue lhs = determinant(sym_power(m, d));
  RingValue rhs = pow(determinant(m), binomial(n + d - 1, d - 1));
  return detail::identity_report("det-sym-identity", m.ring(),
                                 {{"n", static_cast<long long>(n)}, {"d", static_cast<long long>(d)}}, lhs, rhs, {m},
                                 start);
}

/// det(wedge^d M) == det(M)^binom(n-1, d-1), 1 <= d <= n.
inline CheckReport check_det_wedge_identity(const Matrix& m, std::size_t d) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_all_square({m});
  const std::uint64_t n = m.rows();
  if (d == 0 || d > n) throw InvalidArgument("d must satisfy 1 <= d <= n");
  RingValue lhs = determinant(compound(m, d));
  RingValue rhs = pow(determinant(m), binomial(n - 1, d - 1));
  return detail::identity_report("det-wedge-identity", m.ring(),
                                 {{"n", static_cast<long long>(n)}, {"d", static_cast<long long>(d)}}, lhs, rhs, {m},
                                 start);
}

}  // namespace grembed

#endif  // GREMBED_POWERS_HPP
