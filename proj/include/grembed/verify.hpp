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


#ifndef GREMBED_VERIFY_HPP
#define GREMBED_VERIFY_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grembed/error.hpp"
#include "grembed/grassmann.hpp"
#include "grembed/multi_index.hpp"
#include "grembed/parallel.hpp"
#include "grembed/powers.hpp"
#include "grembed/random.hpp"
#include "grembed/report.hpp"

namespace grembed {

/// Parameters of an exhaustive run over a finite ring. Single-Grassmannian
/// checks use n, m, r; tensor checks use the per-factor lists.
struct EnumerationSpec {
  Ring ring = Ring::prime_field(2);
  std::size_t n = 1;
  std::size_t m = 1;
  std::uint32_t r = 1;
  std::vector<std::size_t> factor_dims;
  std::vector<std::size_t> factor_ranks;
  /// Lifts the desk-scale envelope (p <= 3, n <= 4, r <= 3, two factors).
  bool allow_large = false;

  void validate(bool tensor = false) const {
    if (!ring.is_finite()) throw InfiniteRing("exhaustive checks need a finite ring, got " + ring.to_string());
    auto envelope = [&](bool ok, const std::string& what) {
      if (!ok && !allow_large) throw InvalidArgument(what + " exceeds the desk-scale envelope; set allow_large");
    };
    envelope(ring.p() <= 3, "p = " + std::to_string(ring.p()));
    envelope(r <= 3, "r = " + std::to_string(r));
    if (r == 0) throw InvalidArgument("r must be positive");
    if (tensor) {
      if (factor_dims.empty() || factor_dims.size() != factor_ranks.size()) {
        throw InvalidArgument("tensor checks need matching factor dimension and rank lists");
      }
      envelope(factor_dims.size() <= 2, "factor count");
      for (std::size_t i = 0; i < factor_dims.size(); ++i) {
        if (factor_ranks[i] == 0 || factor_ranks[i] > factor_dims[i]) throw InvalidArgument("factor rank out of range");
        envelope(factor_dims[i] <= 4, "factor dimension " + std::to_string(factor_dims[i]));
      }
    } else {
      if (m == 0 || m > n) throw InvalidArgument("need 1 <= m <= n");
      envelope(n <= 4, "n = " + std::to_string(n));
    }
  }

  std::map<std::string, long long> parameters(bool tensor = false) const {
    std::map<std::string, long long> out{{"p", static_cast<long long>(ring.p())}};
    if (tensor) {
      for (std::size_t i = 0; i < factor_dims.size(); ++i) {
        out["n" + std::to_string(i + 1)] = static_cast<long long>(factor_dims[i]);
        out["m" + std::to_string(i + 1)] = static_cast<long long>(factor_ranks[i]);
      }
    } else {
      out["n"] = static_cast<long long>(n);
      out["m"] = static_cast<long long>(m);
    }
    out["r"] = r;
    return out;
  }
};

/// |Gr(n, m)(R)|: the Gaussian binomial over F_q, and over F_p[e] the count
/// of the smooth scheme, |Gr(n, m)(F_p)| * p^(m (n - m)).
inline Integer expected_point_count(const Ring& ring, std::size_t n, std::size_t m) {
  if (!ring.is_finite()) throw InfiniteRing("point count of an infinite ring");
  Integer count = gaussian_binomial(n, m, ring.p());
  if (ring.kind() == RingKind::DualNumbers) {
    count *= boost::multiprecision::pow(Integer(ring.p()), static_cast<unsigned>(m * (n - m)));
  }
  return count;
}

/// Calls visit(point) once for every point of Gr(n, m)(ring). Points are
/// produced directly in normal form: for each candidate pivot row set I the
/// remaining rows are filled with every ring element, and a filling is kept
/// iff I is its lexicographically first unit-minor row set.
inline void for_each_grassmann_point(const Ring& ring, std::size_t n, std::size_t m,
                                     const std::function<void(const GrassmannPoint&)>& visit) {
  if (!ring.is_finite()) throw InfiniteRing("cannot enumerate points over " + ring.to_string());
  if (m == 0 || m > n) throw InvalidArgument("need 1 <= m <= n");
  const auto elements = enumerate_ring(ring);
  for (const auto& pivots : wedge_basis(n, m)) {
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0, k = 0; i < n; ++i) {
      if (k < m && pivots.entries[k] == i) {
        ++k;
      } else {
        free_rows.push_back(i);
      }
    }
    const std::size_t cells = free_rows.size() * m;
    std::vector<std::size_t> digits(cells, 0);
    Matrix cand(ring, n, m);
    for (std::size_t k = 0; k < m; ++k) cand.set(pivots.entries[k], k, ring.one());
    while (true) {
      for (std::size_t c = 0; c < cells; ++c) cand.set(free_rows[c / m], c % m, elements[digits[c]]);
      if (unit_minor_rows(cand) == pivots.entries) visit(GrassmannPoint(cand));
      std::size_t c = cells;
      while (c > 0 && digits[c - 1] + 1 == elements.size()) digits[--c] = 0;
      if (c == 0) break;
      ++digits[c - 1];
    }
  }
}

inline std::vector<GrassmannPoint> enumerate_grassmannian(const Ring& ring, std::size_t n, std::size_t m) {
  std::vector<GrassmannPoint> out;
  for_each_grassmann_point(ring, n, m, [&](const GrassmannPoint& p) { out.push_back(p); });
  return out;
}

inline std::vector<GrassmannPoint> enumerate_grassmannian(const EnumerationSpec& spec) {
  spec.validate();
  return enumerate_grassmannian(spec.ring, spec.n, spec.m);
}

enum class Embedding { Tensor, TensorPower, Wedge, Sym };

inline std::string to_string(Embedding e) {
  switch (e) {
    case Embedding::Tensor:
      return "T";
    case Embedding::TensorPower:
      return "T_r";
    case Embedding::Wedge:
      return "A_r";
    case Embedding::Sym:
      return "S_r";
  }
  return "?";
}

inline Embedding embedding_from_string(const std::string& s) {
  if (s == "T" || s == "tensor") return Embedding::Tensor;
  if (s == "T_r" || s == "tensor-power") return Embedding::TensorPower;
  if (s == "A_r" || s == "wedge") return Embedding::Wedge;
  if (s == "S_r" || s == "sym") return Embedding::Sym;
  throw InvalidArgument("unknown embedding: " + s);
}

namespace detail {

using Clock = std::chrono::steady_clock;

/// Source of an embedding check: a tuple of points (one entry except for T).
using Source = std::vector<GrassmannPoint>;

inline Json source_json(const Source& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

inline std::vector<Source> product_sources(const std::vector<std::vector<GrassmannPoint>>& factors) {
  std::vector<Source> out{{}};
  for (const auto& pts : factors) {
    std::vector<Source> next;
    next.reserve(out.size() * pts.size());
    for (const auto& prefix : out) {
      for (const auto& p : pts) {
        next.push_back(prefix);
        next.back().push_back(p);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Source> sources_for(const EnumerationSpec& spec, Embedding which) {
  if (which == Embedding::Tensor) {
    std::vector<std::vector<GrassmannPoint>> factors;
    for (std::size_t i = 0; i < spec.factor_dims.size(); ++i) {
      factors.push_back(enumerate_grassmannian(spec.ring, spec.factor_dims[i], spec.factor_ranks[i]));
    }
    return product_sources(factors);
  }
  std::vector<Source> out;
  for (auto& p : enumerate_grassmannian(spec.ring, spec.n, spec.m)) out.push_back({std::move(p)});
  return out;
}

/// Image of a source, or nullopt for a degenerate Sym image.
inline std::optional<GrassmannPoint> embed(const Source& s, Embedding which, std::uint32_t r) {
  switch (which) {
    case Embedding::Tensor:
      return tensor_embed(s);
    case Embedding::TensorPower:
      return tensor_power_embed(s.front(), r);
    case Embedding::Wedge:
      return wedge_embed(s.front(), r);
    case Embedding::Sym:
      return try_sym_embed(s.front(), r);
  }
  return std::nullopt;
}

inline Json collision_witness(Embedding which, std::uint32_t r, const Source& a, const Source& b,
                              const GrassmannPoint& image) {
  return {{"case", "collision"}, {"embedding", to_string(which)}, {"r", r},
          {"a", source_json(a)},  {"b", source_json(b)},             {"image", to_json(image)}};
}

inline Json degenerate_witness(Embedding which, std::uint32_t r, const Source& a) {
  return {{"case", "degenerate"}, {"embedding", to_string(which)}, {"r", r}, {"a", source_json(a)}};
}

/// Exhaustive pairwise check "image(a) == image(b) implies a == b" over all
/// ordered pairs of sources.
inline CheckReport pairwise_image_lemma(std::string name, const EnumerationSpec& spec, Embedding which,
                                        bool tensor, bool expect_failure) {
  const auto start = Clock::now();
  spec.validate(tensor);
  CheckReport rep;
  rep.name = std::move(name);
  rep.ring = spec.ring;
  rep.parameters = spec.parameters(tensor);
  rep.expect_failure = expect_failure;

  const auto sources = sources_for(spec, which);
  const std::size_t count = sources.size();
  std::vector<std::optional<GrassmannPoint>> images(count);
  parallel_for(count, [&](std::size_t i) { images[i] = embed(sources[i], which, spec.r); });

  std::vector<std::vector<Json>> found(count);
  parallel_for(count, [&](std::size_t i) {
    if (!images[i]) {
      found[i].push_back(degenerate_witness(which, spec.r, sources[i]));
      return;
    }
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !images[j]) continue;
      if (*images[i] == *images[j] && !(sources[i] == sources[j])) {
        found[i].push_back(collision_witness(which, spec.r, sources[i], sources[j], *images[i]));
      }
    }
  });
  for (auto& f : found) {
    for (auto& w : f) rep.failures.push_back(std::move(w));
  }
  rep.cases_checked = static_cast<std::uint64_t>(count) * count;
  rep.elapsed = Clock::now() - start;
  rep.finalize();
  return rep;
}

}  // namespace detail

/// Equal tensor images force equal factors, over all pairs of factor tuples.
inline CheckReport verify_tensor_image_lemma(const EnumerationSpec& spec) {
  return detail::pairwise_image_lemma("tensor-lemma", spec, Embedding::Tensor, true, false);
}

/// Equal r-th exterior power images force equal points.
inline CheckReport verify_wedge_image_lemma(const EnumerationSpec& spec) {
  if (spec.r > spec.m) throw InvalidArgument("wedge lemma needs r <= m");
  return detail::pairwise_image_lemma("wedge-lemma", spec, Embedding::Wedge, false, false);
}

/// Hypothesis of the symmetric-power lemma: m >= 2 or r invertible in the ring.
inline bool sym_hypothesis_holds(const Ring& ring, std::size_t m, std::uint32_t r) {
  if (m >= 2) return true;
  return is_unit(ring.from_int(r));
}

/// Equal Sym^r images force equal points when m >= 2 or r is invertible.
/// With expect_failure the run must find at least one violating pair.
inline CheckReport verify_sym_image_lemma(const EnumerationSpec& spec, bool expect_failure = false) {
  auto rep = detail::pairwise_image_lemma("sym-lemma", spec, Embedding::Sym, false, expect_failure);
  rep.parameters["hypothesis"] = sym_hypothesis_holds(spec.ring, spec.m, spec.r) ? 1 : 0;
  return rep;
}

/// Injectivity of an embedding on all R-points of the source: every image
/// is distinct. Collisions and degenerate images are reported as witnesses.
inline CheckReport verify_embedding_injectivity(const EnumerationSpec& spec, Embedding which,
                                                bool expect_failure = false) {
  const auto start = detail::Clock::now();
  const bool tensor = which == Embedding::Tensor;
  spec.validate(tensor);
  if (which == Embedding::Wedge && spec.r > spec.m) throw InvalidArgument("wedge embedding needs r <= m");
  CheckReport rep;
  rep.name = "injectivity-" + to_string(which);
  rep.ring = spec.ring;
  rep.parameters = spec.parameters(tensor);
  rep.expect_failure = expect_failure;

  const auto sources = detail::sources_for(spec, which);
  std::vector<std::optional<GrassmannPoint>> images(sources.size());
  parallel_for(sources.size(), [&](std::size_t i) { images[i] = detail::embed(sources[i], which, spec.r); });

  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (!images[i]) {
      rep.failures.push_back(detail::degenerate_witness(which, spec.r, sources[i]));
      continue;
    }
    auto [it, inserted] = seen.emplace(images[i]->key(), i);
    if (!inserted) {
      rep.failures.push_back(detail::collision_witness(which, spec.r, sources[it->second], sources[i], *images[i]));
    }
  }
  rep.parameters["sources"] = static_cast<long long>(sources.size());
  rep.parameters["distinct_images"] = static_cast<long long>(seen.size());
  rep.cases_checked = sources.size();
  rep.elapsed = detail::Clock::now() - start;
  rep.finalize();
  return rep;
}

/// Failure of Sym^r injectivity over F_p[e] when m = 1 and p | r: the lines
/// spanned by e_1 and e_1 + e e_2 are distinct, yet (e_1 + e e_2)^r = e_1^r.
inline CheckReport run_counterexample(std::uint64_t p, std::uint32_t r, std::size_t n = 2) {
  const auto start = detail::Clock::now();
  if (r == 0 || r % p != 0) throw InvalidArgument("counterexample needs p | r");
  if (n < 2) throw InvalidArgument("counterexample needs n >= 2");
  const Ring ring = Ring::dual_numbers(p);
  CheckReport rep;
  rep.name = "counterexample";
  rep.ring = ring;
  rep.parameters = {{"p", static_cast<long long>(p)}, {"r", r}, {"n", static_cast<long long>(n)}};
  rep.expect_failure = true;

  Matrix e1(ring, n, 1);
  e1.set(0, 0, ring.one());
  Matrix e1_eps_e2 = e1;
  e1_eps_e2.set(1, 0, ring.epsilon());
  const GrassmannPoint v1(e1);
  const GrassmannPoint v2(e1_eps_e2);
  rep.cases_checked = 1;
  const bool sources_differ = !(v1 == v2);
  rep.parameters["sources_differ"] = sources_differ ? 1 : 0;
  const auto s1 = try_sym_embed(v1, r);
  const auto s2 = try_sym_embed(v2, r);
  if (sources_differ && s1 && s2 && *s1 == *s2) {
    rep.failures.push_back(detail::collision_witness(Embedding::Sym, r, {v1}, {v2}, *s1));
  }
  rep.elapsed = detail::Clock::now() - start;
  rep.finalize();
  return rep;
}

/// Polynomial ring Z[x{i}_{j}_{k}] for generic matrices of the given sizes
/// (1-based labels: matrix i, row j, column k).
inline Ring generic_ring(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      for (std::size_t k = 0; k < sizes[i]; ++k) {
        vars.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(k + 1));
      }
    }
  }
  return Ring::polynomials(std::move(vars));
}

inline std::vector<Matrix> generic_matrices(const Ring& ring, const std::vector<std::size_t>& sizes) {
  std::vector<Matrix> out;
  std::size_t var = 0;
  for (auto n : sizes) {
    Matrix m(ring, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m.set(j, k, ring.variable(var++));
    }
    out.push_back(std::move(m));
  }
  return out;
}

struct DetIdentityOptions {
  Ring ring = Ring::integers();
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::vector<std::pair<std::size_t, std::size_t>> tensor_sizes{{2, 2}, {2, 3}, {3, 3}};
  /// (n, d) pairs for the Sym^d and wedge^d identities.
  std::vector<std::pair<std::size_t, std::uint32_t>> power_sizes{{2, 2}, {3, 2}, {3, 3}, {4, 2}};
  bool symbolic = true;
  /// Admit generic matrices with more than 8 variables (3x3).
  bool symbolic_large = false;
  long long entry_bound = 5;
};

/// All three determinant identities on seeded random matrices, plus the
/// generic (symbolic) cases over Z[x...].
inline CheckReport verify_det_identities(const DetIdentityOptions& opt) {
  const auto start = detail::Clock::now();
  CheckReport rep;
  rep.name = "det-identities";
  rep.ring = opt.ring;
  rep.parameters = {{"trials", static_cast<long long>(opt.trials)},
                    {"seed", static_cast<long long>(opt.seed)},
                    {"symbolic", opt.symbolic ? 1 : 0},
                    {"symbolic_large", opt.symbolic_large ? 1 : 0}};
  auto take = [&](const CheckReport& part) {
    for (auto w : part.failures) {
      w["check"] = part.name;
      w["parameters"] = part.parameters;
      rep.failures.push_back(std::move(w));
    }
    rep.cases_checked += part.cases_checked;
  };
  Rng rng(opt.seed);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    for (const auto& [n1, n2] : opt.tensor_sizes) {
      take(check_det_tensor_identity({random_matrix(opt.ring, n1, n1, rng, opt.entry_bound),
                                      random_matrix(opt.ring, n2, n2, rng, opt.entry_bound)}));
    }
    for (const auto& [n, d] : opt.power_sizes) {
      Matrix m = random_matrix(opt.ring, n, n, rng, opt.entry_bound);
      take(check_det_sym_identity(m, d));
      if (d <= n) take(check_det_wedge_identity(m, d));
    }
  }
  if (opt.symbolic) {
    const std::size_t max_vars = opt.symbolic_large ? 9 : 8;
    {
      const Ring z = generic_ring({2, 2});
      take(check_det_tensor_identity(generic_matrices(z, {2, 2})));
    }
    for (std::size_t n = 2; n * n <= max_vars; ++n) {
      const Ring z = generic_ring({n});
      const Matrix g = generic_matrices(z, {n}).front();
      for (std::uint32_t d = 1; d <= 2; ++d) {
        take(check_det_sym_identity(g, d));
        take(check_det_wedge_identity(g, d));
      }
    }
  }
  rep.elapsed = detail::Clock::now() - start;
  rep.finalize();
  return rep;
}

namespace detail {

/// Decodes index into the n x n matrix whose entries are its base-|R| digits.
inline Matrix matrix_from_index(const std::vector<RingValue>& elements, std::size_t rows, std::size_t cols,
                                std::uint64_t index) {
  std::vector<RingValue> e;
  e.reserve(rows * cols);
  for (std::size_t c = 0; c < rows * cols; ++c) {
    e.push_back(elements[index % elements.size()]);
    index /= elements.size();
  }
  return Matrix(elements.front().ring(), rows, cols, std::move(e));
}

inline std::uint64_t matrix_count(std::size_t elements, std::size_t cells) {
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (total > (std::uint64_t{1} << 40) / elements) throw InvalidArgument("matrix space too large to enumerate");
    total *= elements;
  }
  return total;
}

}  // namespace detail

/// M_1 (x) M_2 is invertible iff both factors are, over all pairs of square
/// matrices of the given sizes.
inline CheckReport verify_tensor_invertibility(const Ring& ring, std::size_t n1, std::size_t n2) {
  const auto start = detail::Clock::now();
  const auto elements = enumerate_ring(ring);
  CheckReport rep;
  rep.name = "tensor-invertibility";
  rep.ring = ring;
  rep.parameters = {{"n1", static_cast<long long>(n1)}, {"n2", static_cast<long long>(n2)}};
  const auto c1 = detail::matrix_count(elements.size(), n1 * n1);
  const auto c2 = detail::matrix_count(elements.size(), n2 * n2);
  std::vector<std::vector<Json>> found(c1);
  parallel_for(c1, [&](std::size_t i) {
    Matrix a = detail::matrix_from_index(elements, n1, n1, i);
    const bool inv_a = is_invertible(a);
    for (std::uint64_t j = 0; j < c2; ++j) {
      Matrix b = detail::matrix_from_index(elements, n2, n2, j);
      const bool lhs = is_invertible(kronecker({a, b}));
      if (lhs != (inv_a && is_invertible(b))) {
        found[i].push_back({{"case", "tensor-invertibility"}, {"a", to_json(a)}, {"b", to_json(b)}});
      }
    }
  });
  for (auto& f : found) {
    for (auto& w : f) rep.failures.push_back(std::move(w));
  }
  rep.cases_checked = c1 * c2;
  rep.elapsed = detail::Clock::now() - start;
  rep.finalize();
  return rep;
}

/// wedge^d M (or Sym^d M) is invertible iff M is. Exhaustive over all n x n
/// matrices, or over `samples` seeded draws when given.
inline CheckReport verify_power_invertibility(const Ring& ring, Embedding kind, std::size_t n, std::uint32_t d,
                                              std::optional<std::size_t> samples = std::nullopt,
                                              std::uint64_t seed = 1) {
  const auto start = detail::Clock::now();
  if (kind != Embedding::Wedge && kind != Embedding::Sym) throw InvalidArgument("kind must be wedge or sym");
  if (d == 0 || (kind == Embedding::Wedge && d > n)) throw InvalidArgument("power degree out of range");
  const auto elements = enumerate_ring(ring);
  const auto total = detail::matrix_count(elements.size(), n * n);
  std::vector<std::uint64_t> indices;
  if (samples) {
    Rng rng(seed);
    for (std::size_t s = 0; s < *samples; ++s) indices.push_back(rng() % total);
  } else {
    indices.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) indices[i] = i;
  }
  CheckReport rep;
  rep.name = kind == Embedding::Wedge ? "wedge-invertibility" : "sym-invertibility";
  rep.ring = ring;
  rep.parameters = {{"n", static_cast<long long>(n)}, {"d", d}};
  if (samples) rep.parameters["seed"] = static_cast<long long>(seed);
  std::vector<std::optional<Json>> found(indices.size());
  parallel_for(indices.size(), [&](std::size_t i) {
    Matrix m = detail::matrix_from_index(elements, n, n, indices[i]);
    Matrix power = kind == Embedding::Wedge ? compound(m, d) : sym_power(m, d);
    if (is_invertible(power) != is_invertible(m)) {
      found[i] = Json{{"case", rep.name}, {"d", d}, {"matrix", to_json(m)}};
    }
  });
  for (auto& f : found) {
    if (f) rep.failures.push_back(std::move(*f));
  }
  rep.cases_checked = indices.size();
  rep.elapsed = detail::Clock::now() - start;
  rep.finalize();
  return rep;
}

/// Re-runs the single case recorded in a witness and reports whether the
/// violation it describes still occurs.
inline bool witness_reproduces(const Json& w) {
  const auto kind = w.at("case").get<std::string>();
  if (kind == "collision" || kind == "degenerate") {
    const Embedding which = embedding_from_string(w.at("embedding").get<std::string>());
    const auto r = w.at("r").get<std::uint32_t>();
    auto parse = [](const Json& arr) {
      detail::Source s;
      for (const auto& p : arr) s.push_back(point_from_json(p));
      return s;
    };
    const auto a = parse(w.at("a"));
    const auto ia = detail::embed(a, which, r);
    if (kind == "degenerate") return !ia.has_value();
    const auto b = parse(w.at("b"));
    const auto ib = detail::embed(b, which, r);
    return !(a == b) && ia && ib && *ia == *ib;
  }
  if (kind == "tensor-invertibility") {
    Matrix a = matrix_from_json(w.at("a"));
    Matrix b = matrix_from_json(w.at("b"));
    return is_invertible(kronecker({a, b})) != (is_invertible(a) && is_invertible(b));
  }
  if (kind == "wedge-invertibility" || kind == "sym-invertibility") {
    Matrix m = matrix_from_json(w.at("matrix"));
    const auto d = w.at("d").get<std::uint32_t>();
    Matrix power = kind == "wedge-invertibility" ? compound(m, d) : sym_power(m, d);
    return is_invertible(power) != is_invertible(m);
  }
  if (w.contains("check") && w.contains("matrices")) {
    std::vector<Matrix> ms;
    for (const auto& j : w.at("matrices")) ms.push_back(matrix_from_json(j));
    const auto check = w.at("check").get<std::string>();
    if (check == "det-tensor-identity") return !check_det_tensor_identity(ms).ok();
    const auto d = static_cast<std::uint32_t>(w.at("parameters").at("d").get<long long>());
    if (check == "det-sym-identity") return !check_det_sym_identity(ms.front(), d).ok();
    if (check == "det-wedge-identity") return !check_det_wedge_identity(ms.front(), d).ok();
  }
  throw InvalidArgument("unrecognized witness");
}

}  // namespace grembed

#endif  // GREMBED_VERIFY_HPP
