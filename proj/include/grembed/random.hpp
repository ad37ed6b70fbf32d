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


#ifndef GREMBED_RANDOM_HPP
#define GREMBED_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "grembed/matrix.hpp"
#include "grembed/ring.hpp"

namespace grembed {

using Rng = std::mt19937_64;

namespace detail {

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

/// Small random element: integers in [-bound, bound], uniform residues, and
/// polynomials with up to three terms of degree <= 2.
inline RingValue random_value(const Ring& ring, Rng& rng, long long bound = 5) {
  switch (ring.kind()) {
    case RingKind::Integer:
      return ring.from_int(detail::uniform(rng, -bound, bound));
    case RingKind::Rational:
      return ring.from_rational(Rational(detail::uniform(rng, -bound, bound), detail::uniform(rng, 1, bound)));
    case RingKind::PrimeField:
      return ring.from_integer(Integer(rng() % ring.p()));
    case RingKind::DualNumbers:
      return ring.dual(rng() % ring.p(), rng() % ring.p());
    case RingKind::PolyOverInt: {
      std::vector<Polynomial::Term> terms;
      const auto terms_count = detail::uniform(rng, 0, 3);
      for (long long t = 0; t < terms_count; ++t) {
        Monomial m(ring.num_vars(), 0);
        const auto degree = detail::uniform(rng, 0, 2);
        for (long long d = 0; d < degree && !m.empty(); ++d) ++m[rng() % m.size()];
        terms.push_back({std::move(m), Integer(detail::uniform(rng, -bound, bound))});
      }
      return ring.from_polynomial(Polynomial::from_terms(ring.num_vars(), std::move(terms)));
    }
  }
  return ring.zero();
}

inline Matrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, Rng& rng, long long bound = 5) {
  std::vector<RingValue> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(random_value(ring, rng, bound));
  return Matrix(ring, rows, cols, std::move(e));
}

}  // namespace grembed

#endif  // GREMBED_RANDOM_HPP
