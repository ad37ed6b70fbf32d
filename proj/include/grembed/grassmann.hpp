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


#ifndef GREMBED_GRASSMANN_HPP
#define GREMBED_GRASSMANN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grembed/error.hpp"
#include "grembed/matrix.hpp"
#include "grembed/multi_index.hpp"
#include "grembed/powers.hpp"
#include "grembed/serialize.hpp"

namespace grembed {

/// A rank-m free direct summand of R^n, stored as the column span of its
/// normal-form basis. Two points are equal iff their spans are equal.
class GrassmannPoint {
 public:
  /// Canonicalizes the column span of `columns`.
  explicit GrassmannPoint(const Matrix& columns) : basis_(column_span_normal_form(columns)) {}

  const Ring& ring() const { return basis_.ring(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  /// Stable textual key of the point, for hashing and ordering collections.
  std::string key() const { return basis_.to_string(); }

  std::string to_string() const {
    return "Gr(" + std::to_string(ambient_dim()) + "," + std::to_string(rank()) + ")(" + ring().to_string() +
           ") span " + basis_.to_string();
  }

  friend bool operator==(const GrassmannPoint& a, const GrassmannPoint& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
};

inline GrassmannPoint point_from_matrix(const Ring& ring, std::size_t n, std::size_t m, const Matrix& columns) {
  if (!(columns.ring() == ring)) throw RingMismatch("point_from_matrix: matrix is over " + columns.ring().to_string());
  if (columns.rows() != n || columns.cols() != m) throw DimensionMismatch("point_from_matrix: expected n x m columns");
  if (m > n) throw InvalidArgument("point rank exceeds ambient dimension");
  return GrassmannPoint(columns);
}

inline bool points_equal(const GrassmannPoint& a, const GrassmannPoint& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("points_equal: ring mismatch");
  if (a.ambient_dim() != b.ambient_dim() || a.rank() != b.rank()) {
    throw DimensionMismatch("points_equal: points live in different Grassmannians");
  }
  return a == b;
}

namespace detail {

inline void require_rank(const GrassmannPoint& p, std::size_t expected, const char* what) {
  if (p.rank() != expected) throw std::logic_error(std::string(what) + ": image rank formula violated");
}

}  // namespace detail

/// Tensor-product embedding: (V_1, ..., V_r) -> V_1 (x) ... (x) V_r inside
/// the tensor product of the ambient spaces.
inline GrassmannPoint tensor_embed(const std::vector<GrassmannPoint>& ps) {
  if (ps.empty()) throw InvalidArgument("tensor_embed of an empty list");
  std::vector<Matrix> bases;
  std::size_t rank = 1;
  for (const auto& p : ps) {
    if (!(p.ring() == ps.front().ring())) throw RingMismatch("tensor_embed: ring mismatch");
    bases.push_back(p.basis());
    rank *= p.rank();
  }
  GrassmannPoint image(kronecker(bases));
  detail::require_rank(image, rank, "tensor_embed");
  return image;
}

/// Tensor embedding composed with the diagonal: V -> V^{(x) r}.
inline GrassmannPoint tensor_power_embed(const GrassmannPoint& p, std::size_t r) {
  if (r == 0) throw InvalidArgument("tensor_power_embed: r must be positive");
  return tensor_embed(std::vector<GrassmannPoint>(r, p));
}

/// Exterior-power embedding V -> wedge^r V; r = rank gives Pluecker coordinates.
inline GrassmannPoint wedge_embed(const GrassmannPoint& p, std::size_t r) {
  if (r == 0 || r > p.rank()) throw InvalidArgument("wedge_embed: need 1 <= r <= m");
  GrassmannPoint image(compound(p.basis(), r));
  detail::require_rank(image, binomial_size(p.rank(), r), "wedge_embed");
  return image;
}

/// Symmetric-power embedding V -> Sym^r V. Throws DegenerateImage when the
/// image span is not a free direct summand.
inline GrassmannPoint sym_embed(const GrassmannPoint& p, std::uint32_t r) {
  if (r == 0) throw InvalidArgument("sym_embed: r must be positive");
  Matrix image_basis = sym_power(p.basis(), r);
  try {
    GrassmannPoint image(image_basis);
    detail::require_rank(image, binomial_size(p.rank() + r - 1, r), "sym_embed");
    return image;
  } catch (const NotFreeSpan&) {
    throw DegenerateImage("Sym^" + std::to_string(r) + " image of a rank-" + std::to_string(p.rank()) +
                          " point over " + p.ring().to_string() +
                          " is not a free direct summand (possible only for m = 1 with p | r)");
  }
}

inline std::optional<GrassmannPoint> try_sym_embed(const GrassmannPoint& p, std::uint32_t r) {
  try {
    return sym_embed(p, r);
  } catch (const DegenerateImage&) {
    return std::nullopt;
  }
}

/// Pluecker coordinates of a point, normalized so the first unit coordinate
/// is 1, labelled by wedge basis index.
inline std::vector<std::pair<WedgeIndex, RingValue>> pluecker_coordinates(const GrassmannPoint& p) {
  GrassmannPoint line = wedge_embed(p, p.rank());
  auto labels = wedge_basis(p.ambient_dim(), p.rank());
  std::vector<std::pair<WedgeIndex, RingValue>> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out.emplace_back(labels[i], line.basis()(i, 0));
  return out;
}

inline Json to_json(const GrassmannPoint& p) {
  return {{"ring", to_json(p.ring())}, {"n", p.ambient_dim()}, {"m", p.rank()}, {"basis", to_json(p.basis())}};
}

inline GrassmannPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("n") || !j.contains("m") || !j.contains("basis")) {
    throw ParseError("point needs ring, n, m and basis");
  }
  Ring ring = ring_from_json(j["ring"]);
  const auto n = detail::size_from_json(j["n"], "n");
  const auto m = detail::size_from_json(j["m"], "m");
  Matrix basis = matrix_from_json(j["basis"]);
  return point_from_matrix(ring, n, m, basis);
}

}  // namespace grembed

#endif  // GREMBED_GRASSMANN_HPP
