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


#ifndef GREMBED_RING_HPP
#define GREMBED_RING_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "grembed/error.hpp"
#include "grembed/polynomial.hpp"

namespace grembed {

enum class RingKind { Integer, Rational, PrimeField, DualNumbers, PolyOverInt };

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

class RingValue;

/// Runtime description of one of the supported commutative rings:
/// Z, Q, F_p, the dual numbers F_p[e]/(e^2), and Z[x_1..x_k].
class Ring {
 public:
  Ring() = default;

  static Ring integers() { return Ring(RingKind::Integer, 0, nullptr); }
  static Ring rationals() { return Ring(RingKind::Rational, 0, nullptr); }

  static Ring prime_field(std::uint64_t p) {
    require_prime(p);
    return Ring(RingKind::PrimeField, p, nullptr);
  }

  static Ring dual_numbers(std::uint64_t p) {
    require_prime(p);
    return Ring(RingKind::DualNumbers, p, nullptr);
  }

  static Ring polynomials(std::vector<std::string> variables) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
      if (v.empty()) throw InvalidArgument("polynomial variable names must be nonempty");
      if (!seen.insert(v).second) throw InvalidArgument("duplicate polynomial variable name: " + v);
    }
    return Ring(RingKind::PolyOverInt, 0,
                std::make_shared<const std::vector<std::string>>(std::move(variables)));
  }

  RingKind kind() const { return kind_; }
  /// The prime p for F_p and F_p[e]; zero otherwise.
  std::uint64_t p() const { return p_; }

  const std::vector<std::string>& variables() const {
    static const std::vector<std::string> none;
    return vars_ ? *vars_ : none;
  }
  std::size_t num_vars() const { return vars_ ? vars_->size() : 0; }

  bool is_field() const { return kind_ == RingKind::Rational || kind_ == RingKind::PrimeField; }
  bool is_finite() const { return kind_ == RingKind::PrimeField || kind_ == RingKind::DualNumbers; }
  bool is_integral_domain() const { return kind_ != RingKind::DualNumbers; }

  std::optional<std::uint64_t> cardinality() const {
    if (kind_ == RingKind::PrimeField) return p_;
    if (kind_ == RingKind::DualNumbers) return p_ * p_;
    return std::nullopt;
  }

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(long long v) const;
  RingValue from_integer(const Integer& v) const;
  RingValue from_rational(const Rational& v) const;
  /// a + b*e in F_p[e].
  RingValue dual(std::uint64_t a, std::uint64_t b) const;
  RingValue epsilon() const;
  RingValue variable(std::size_t index) const;
  RingValue from_polynomial(Polynomial poly) const;

  std::string to_string() const {
    switch (kind_) {
      case RingKind::Integer:
        return "Z";
      case RingKind::Rational:
        return "Q";
      case RingKind::PrimeField:
        return "F_" + std::to_string(p_);
      case RingKind::DualNumbers:
        return "F_" + std::to_string(p_) + "[e]";
      case RingKind::PolyOverInt: {
        std::string s = "Z[";
        for (std::size_t i = 0; i < num_vars(); ++i) s += (i ? "," : "") + (*vars_)[i];
        return s + "]";
      }
    }
    return "?";
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    if (a.kind_ != b.kind_ || a.p_ != b.p_) return false;
    if (a.kind_ != RingKind::PolyOverInt || a.vars_ == b.vars_) return true;
    return *a.vars_ == *b.vars_;
  }

 private:
  Ring(RingKind kind, std::uint64_t p, std::shared_ptr<const std::vector<std::string>> vars)
      : kind_(kind), p_(p), vars_(std::move(vars)) {}

  static void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 62)) throw InvalidArgument("prime too large");
  }

  RingKind kind_ = RingKind::Integer;
  std::uint64_t p_ = 0;
  std::shared_ptr<const std::vector<std::string>> vars_;
};

/// a + b*e with a, b in [0, p).
struct Dual {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool operator==(const Dual&) const = default;
};

/// An element of a Ring, always stored in canonical form. Immutable once built.
class RingValue {
 public:
  using Payload = std::variant<Integer, Rational, std::uint64_t, Dual, Polynomial>;

  /// The integer zero.
  RingValue() = default;

  const Ring& ring() const { return ring_; }
  const Payload& payload() const { return data_; }

  const Integer& integer() const { return std::get<Integer>(data_); }
  const Rational& rational() const { return std::get<Rational>(data_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(data_); }
  const Dual& dual() const { return std::get<Dual>(data_); }
  const Polynomial& polynomial() const { return std::get<Polynomial>(data_); }

  bool is_zero() const {
    switch (ring_.kind()) {
      case RingKind::Integer:
        return integer() == 0;
      case RingKind::Rational:
        return rational() == 0;
      case RingKind::PrimeField:
        return residue() == 0;
      case RingKind::DualNumbers:
        return dual().a == 0 && dual().b == 0;
      case RingKind::PolyOverInt:
        return polynomial().is_zero();
    }
    return false;
  }

  bool is_one() const { return *this == ring_.one(); }

  std::string to_string() const {
    switch (ring_.kind()) {
      case RingKind::Integer:
        return integer().str();
      case RingKind::Rational: {
        std::ostringstream os;
        os << rational();
        return os.str();
      }
      case RingKind::PrimeField:
        return std::to_string(residue());
      case RingKind::DualNumbers: {
        const auto& d = dual();
        if (d.b == 0) return std::to_string(d.a);
        std::string eps = d.b == 1 ? "e" : std::to_string(d.b) + "e";
        return d.a == 0 ? eps : std::to_string(d.a) + "+" + eps;
      }
      case RingKind::PolyOverInt:
        return poly_to_string();
    }
    return "?";
  }

  friend bool operator==(const RingValue& x, const RingValue& y) {
    return x.ring_ == y.ring_ && x.data_ == y.data_;
  }

 private:
  friend class Ring;
  friend RingValue make_value(const Ring& ring, Payload data);

  RingValue(Ring ring, Payload data) : ring_(std::move(ring)), data_(std::move(data)) {}

  std::string poly_to_string() const {
    const auto& poly = polynomial();
    if (poly.is_zero()) return "0";
    const auto& names = ring_.variables();
    std::string out;
    bool first = true;
    for (const auto& t : poly.terms()) {
      Integer c = t.coeff;
      bool negative = c < 0;
      if (negative) c = -c;
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
      }
      if (mono.empty()) {
        out += c.str();
      } else {
        out += (c == 1 ? std::string() : c.str() + "*") + mono;
      }
    }
    return out;
  }

  Ring ring_ = Ring::integers();
  Payload data_ = Integer(0);
};

/// Wraps a payload without canonicalizing; callers guarantee canonical form.
inline RingValue make_value(const Ring& ring, RingValue::Payload data) { return RingValue(ring, std::move(data)); }

inline RingValue Ring::from_integer(const Integer& v) const {
  switch (kind_) {
    case RingKind::Integer:
      return RingValue(*this, v);
    case RingKind::Rational:
      return RingValue(*this, Rational(v));
    case RingKind::PrimeField:
    case RingKind::DualNumbers: {
      Integer r = v % p_;
      if (r < 0) r += p_;
      auto res = static_cast<std::uint64_t>(r);
      if (kind_ == RingKind::PrimeField) return RingValue(*this, res);
      return RingValue(*this, Dual{res, 0});
    }
    case RingKind::PolyOverInt:
      return RingValue(*this, Polynomial::constant(num_vars(), v));
  }
  throw InvalidArgument("unknown ring kind");
}

inline RingValue Ring::zero() const { return from_integer(0); }
inline RingValue Ring::one() const { return from_integer(1); }
inline RingValue Ring::from_int(long long v) const { return from_integer(Integer(v)); }

inline RingValue Ring::from_rational(const Rational& v) const {
  if (kind_ == RingKind::Rational) return RingValue(*this, v);
  if (denominator(v) == 1) return from_integer(numerator(v));
  if (kind_ == RingKind::PrimeField || kind_ == RingKind::DualNumbers) {
    Integer den = denominator(v) % p_;
    if (den == 0) throw NotAUnit("denominator vanishes modulo " + std::to_string(p_));
    auto inv = detail::powmod(static_cast<std::uint64_t>(den), p_ - 2, p_);
    return from_integer(numerator(v) * inv);
  }
  throw InvalidArgument("non-integral rational in " + to_string());
}

inline RingValue Ring::dual(std::uint64_t a, std::uint64_t b) const {
  if (kind_ != RingKind::DualNumbers) throw RingMismatch("dual() requires a dual-number ring");
  return RingValue(*this, Dual{a % p_, b % p_});
}

inline RingValue Ring::epsilon() const { return dual(0, 1); }

inline RingValue Ring::variable(std::size_t index) const {
  if (kind_ != RingKind::PolyOverInt) throw RingMismatch("variable() requires a polynomial ring");
  return RingValue(*this, Polynomial::variable(num_vars(), index));
}

inline RingValue Ring::from_polynomial(Polynomial poly) const {
  if (kind_ != RingKind::PolyOverInt) throw RingMismatch("from_polynomial() requires a polynomial ring");
  if (poly.num_vars() != num_vars()) throw InvalidArgument("polynomial variable count mismatch");
  return RingValue(*this, std::move(poly));
}

namespace detail {

inline void require_same_ring(const RingValue& x, const RingValue& y) {
  if (!(x.ring() == y.ring())) {
    throw RingMismatch("ring mismatch: " + x.ring().to_string() + " vs " + y.ring().to_string());
  }
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

}  // namespace detail

inline RingValue add(const RingValue& x, const RingValue& y) {
  detail::require_same_ring(x, y);
  const Ring& r = x.ring();
  const auto p = r.p();
  switch (r.kind()) {
    case RingKind::Integer:
      return make_value(r, Integer(x.integer() + y.integer()));
    case RingKind::Rational:
      return make_value(r, Rational(x.rational() + y.rational()));
    case RingKind::PrimeField:
      return make_value(r, detail::addmod(x.residue(), y.residue(), p));
    case RingKind::DualNumbers:
      return make_value(r, Dual{detail::addmod(x.dual().a, y.dual().a, p), detail::addmod(x.dual().b, y.dual().b, p)});
    case RingKind::PolyOverInt:
      return make_value(r, x.polynomial() + y.polynomial());
  }
  throw InvalidArgument("unknown ring kind");
}

inline RingValue neg(const RingValue& x) {
  const Ring& r = x.ring();
  const auto p = r.p();
  switch (r.kind()) {
    case RingKind::Integer:
      return make_value(r, Integer(-x.integer()));
    case RingKind::Rational:
      return make_value(r, Rational(-x.rational()));
    case RingKind::PrimeField:
      return make_value(r, detail::submod(0, x.residue(), p));
    case RingKind::DualNumbers:
      return make_value(r, Dual{detail::submod(0, x.dual().a, p), detail::submod(0, x.dual().b, p)});
    case RingKind::PolyOverInt:
      return make_value(r, -x.polynomial());
  }
  throw InvalidArgument("unknown ring kind");
}

inline RingValue sub(const RingValue& x, const RingValue& y) {
  detail::require_same_ring(x, y);
  if (x.ring().kind() == RingKind::PolyOverInt) return make_value(x.ring(), x.polynomial() - y.polynomial());
  return add(x, neg(y));
}

inline RingValue mul(const RingValue& x, const RingValue& y) {
  detail::require_same_ring(x, y);
  const Ring& r = x.ring();
  const auto p = r.p();
  switch (r.kind()) {
    case RingKind::Integer:
      return make_value(r, Integer(x.integer() * y.integer()));
    case RingKind::Rational:
      return make_value(r, Rational(x.rational() * y.rational()));
    case RingKind::PrimeField:
      return make_value(r, detail::mulmod(x.residue(), y.residue(), p));
    case RingKind::DualNumbers: {
      // (a + b e)(c + d e) = ac + (ad + bc) e since e^2 = 0.
      const auto& [a, b] = x.dual();
      const auto& [c, d] = y.dual();
      return make_value(
          r, Dual{detail::mulmod(a, c, p), detail::addmod(detail::mulmod(a, d, p), detail::mulmod(b, c, p), p)});
    }
    case RingKind::PolyOverInt:
      return make_value(r, x.polynomial() * y.polynomial());
  }
  throw InvalidArgument("unknown ring kind");
}

inline RingValue operator+(const RingValue& x, const RingValue& y) { return add(x, y); }
inline RingValue operator-(const RingValue& x, const RingValue& y) { return sub(x, y); }
inline RingValue operator-(const RingValue& x) { return neg(x); }
inline RingValue operator*(const RingValue& x, const RingValue& y) { return mul(x, y); }

inline RingValue pow(const RingValue& x, std::uint64_t e) {
  RingValue result = x.ring().one();
  RingValue base = x;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

inline RingValue pow(const RingValue& x, const Integer& e) {
  if (e < 0) throw InvalidArgument("negative exponent");
  if (e > Integer(std::numeric_limits<std::uint64_t>::max())) throw InvalidArgument("exponent too large");
  return pow(x, static_cast<std::uint64_t>(e));
}

/// Exact per-ring unit test: nonzero in fields, +-1 in Z and Z[x..],
/// nonzero constant term in F_p[e].
inline bool is_unit(const RingValue& x) {
  switch (x.ring().kind()) {
    case RingKind::Integer:
      return x.integer() == 1 || x.integer() == -1;
    case RingKind::Rational:
    case RingKind::PrimeField:
      return !x.is_zero();
    case RingKind::DualNumbers:
      return x.dual().a != 0;
    case RingKind::PolyOverInt: {
      const auto& poly = x.polynomial();
      return poly.is_constant() && (poly.constant_term() == 1 || poly.constant_term() == -1);
    }
  }
  return false;
}

inline RingValue inverse(const RingValue& x) {
  if (!is_unit(x)) throw NotAUnit(x.to_string() + " is not a unit in " + x.ring().to_string());
  const Ring& r = x.ring();
  const auto p = r.p();
  switch (r.kind()) {
    case RingKind::Integer:
    case RingKind::PolyOverInt:
      return x;
    case RingKind::Rational:
      return make_value(r, Rational(Rational(1) / x.rational()));
    case RingKind::PrimeField:
      return make_value(r, detail::powmod(x.residue(), p - 2, p));
    case RingKind::DualNumbers: {
      // (a + b e)^-1 = a^-1 - b a^-2 e.
      auto ai = detail::powmod(x.dual().a, p - 2, p);
      auto bi = detail::submod(0, detail::mulmod(x.dual().b, detail::mulmod(ai, ai, p), p), p);
      return make_value(r, Dual{ai, bi});
    }
  }
  throw InvalidArgument("unknown ring kind");
}

/// The unique q with q*y = x, for y a non-zero-divisor dividing x.
/// Over F_p[e] only unit divisors are accepted.
inline RingValue exact_quotient(const RingValue& x, const RingValue& y) {
  detail::require_same_ring(x, y);
  const Ring& r = x.ring();
  switch (r.kind()) {
    case RingKind::Integer: {
      if (y.integer() == 0) throw NotAUnit("division by zero");
      Integer q, rem;
      boost::multiprecision::divide_qr(x.integer(), y.integer(), q, rem);
      if (rem != 0) throw NotAUnit("inexact integer division");
      return make_value(r, std::move(q));
    }
    case RingKind::PolyOverInt:
      return make_value(r, divide_exact(x.polynomial(), y.polynomial()));
    default:
      return x * inverse(y);
  }
}

/// All elements of a finite ring, each exactly once. F_p[e] elements are
/// listed as a + b e in order of (b, a).
inline std::vector<RingValue> enumerate_ring(const Ring& ring) {
  if (!ring.is_finite()) throw InfiniteRing("cannot enumerate " + ring.to_string());
  std::vector<RingValue> out;
  const auto p = ring.p();
  if (ring.kind() == RingKind::PrimeField) {
    out.reserve(p);
    for (std::uint64_t a = 0; a < p; ++a) out.push_back(make_value(ring, a));
  } else {
    out.reserve(p * p);
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t a = 0; a < p; ++a) out.push_back(make_value(ring, Dual{a, b}));
    }
  }
  return out;
}

/// Image of a polynomial under the homomorphism Z[x_1..x_k] -> target sending
/// x_i to point[i].
inline RingValue evaluate(const RingValue& poly, std::span<const RingValue> point, const Ring& target) {
  if (poly.ring().kind() != RingKind::PolyOverInt) throw RingMismatch("evaluate() requires a polynomial");
  if (point.size() != poly.ring().num_vars()) throw DimensionMismatch("evaluation point has wrong length");
  for (const auto& v : point) {
    if (!(v.ring() == target)) throw RingMismatch("evaluation point outside target ring");
  }
  RingValue acc = target.zero();
  for (const auto& t : poly.polynomial().terms()) {
    RingValue term = target.from_integer(t.coeff);
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.exponents[i]) term = term * pow(point[i], t.exponents[i]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace grembed

#endif  // GREMBED_RING_HPP
