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


#ifndef GREMBED_POLYNOMIAL_HPP
#define GREMBED_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grembed/error.hpp"

namespace grembed {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector of a monomial; length equals the number of variables.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Graded-lex comparison: higher total degree first, ties broken by
/// lexicographic order on the exponent vector (x0 > x1 > ...).
/// Returns true when a comes strictly before b.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m) {
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// Terms are kept sorted in graded-lex order (leading term first) and never
/// carry a zero coefficient, so structural equality is polynomial equality.
class Polynomial {
 public:
  struct Term {
    Monomial exponents;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Integer& c) {
    Polynomial p(num_vars);
    if (c != 0) p.terms_.push_back({Monomial(num_vars, 0), c});
    return p;
  }

  static Polynomial variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw InvalidArgument("polynomial variable index out of range");
    Monomial m(num_vars, 0);
    m[index] = 1;
    Polynomial p(num_vars);
    p.terms_.push_back({std::move(m), Integer(1)});
    return p;
  }

  /// Builds a polynomial from arbitrary (possibly repeated, unsorted, zero)
  /// terms and canonicalizes.
  static Polynomial from_terms(std::size_t num_vars, std::vector<Term> terms) {
    for (const auto& t : terms) {
      if (t.exponents.size() != num_vars) {
        throw InvalidArgument("monomial length does not match number of variables");
      }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return GrlexGreater{}(a.exponents, b.exponents); });
    Polynomial p(num_vars);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exponents) == 0);
  }

  Integer constant_term() const {
    if (!terms_.empty() && total_degree(terms_.back().exponents) == 0) return terms_.back().coeff;
    return 0;
  }

  bool operator==(const Polynomial&) const = default;

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.num_vars_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      // Multiplying by a single term preserves the monomial order.
      const Polynomial& mono = a.terms_.size() == 1 ? a : b;
      const Polynomial& other = a.terms_.size() == 1 ? b : a;
      const Term& t = mono.terms_[0];
      r.terms_.reserve(other.terms_.size());
      for (const auto& u : other.terms_) {
        r.terms_.push_back({product(t.exponents, u.exponents), t.coeff * u.coeff});
      }
      return r;
    }
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& t : a.terms_) {
      for (const auto& u : b.terms_) {
        acc[product(t.exponents, u.exponents)] += t.coeff * u.coeff;
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c != 0) out.push_back({m, std::move(c)});
    }
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return GrlexGreater{}(x.exponents, y.exponents); });
    r.terms_ = std::move(out);
    return r;
  }

  /// Exact quotient a / b; throws NotAUnit when b does not divide a.
  friend Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw NotAUnit("polynomial division by zero");
    Polynomial q(a.num_vars_);
    if (a.is_zero()) return q;
    std::map<Monomial, Integer, GrlexGreater> rem;
    for (const auto& t : a.terms_) rem.emplace(t.exponents, t.coeff);
    const Term& lead = b.terms_.front();
    while (!rem.empty()) {
      auto it = rem.begin();
      Monomial qm(a.num_vars_);
      for (std::size_t i = 0; i < qm.size(); ++i) {
        if (it->first[i] < lead.exponents[i]) throw NotAUnit("polynomial is not an exact divisor");
        qm[i] = it->first[i] - lead.exponents[i];
      }
      Integer rest;
      Integer qc;
      boost::multiprecision::divide_qr(it->second, lead.coeff, qc, rest);
      if (rest != 0) throw NotAUnit("polynomial is not an exact divisor");
      for (const auto& u : b.terms_) {
        auto m = product(qm, u.exponents);
        auto [pos, inserted] = rem.try_emplace(std::move(m), 0);
        pos->second -= qc * u.coeff;
        if (pos->second == 0) rem.erase(pos);
      }
      q.terms_.push_back({std::move(qm), std::move(qc)});
    }
    return q;
  }

 private:
  static Monomial product(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
    return m;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r(a.num_vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    GrlexGreater before;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && before(a.terms_[i].exponents, b.terms_[j].exponents))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || before(b.terms_[j].exponents, a.terms_[i].exponents)) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        Integer c = subtract ? Integer(a.terms_[i].coeff - b.terms_[j].coeff) : Integer(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].exponents, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace grembed

#endif  // GREMBED_POLYNOMIAL_HPP
