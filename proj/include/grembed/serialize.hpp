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


#ifndef GREMBED_SERIALIZE_HPP
#define GREMBED_SERIALIZE_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "grembed/error.hpp"
#include "grembed/matrix.hpp"
#include "grembed/ring.hpp"

namespace grembed {

using Json = nlohmann::json;

inline Json to_json(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integer:
      return {{"kind", "Integer"}};
    case RingKind::Rational:
      return {{"kind", "Rational"}};
    case RingKind::PrimeField:
      return {{"kind", "PrimeField"}, {"p", ring.p()}};
    case RingKind::DualNumbers:
      return {{"kind", "DualNumbers"}, {"p", ring.p()}};
    case RingKind::PolyOverInt:
      return {{"kind", "PolyOverInt"}, {"variables", ring.variables()}};
  }
  return {};
}

namespace detail {

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not an integer: " + j.dump());
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

inline std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) {
    throw ParseError(std::string(what) + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

}  // namespace detail

inline Ring ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw ParseError("ring must have a kind");
  const auto kind = j["kind"].get<std::string>();
  auto prime = [&] {
    if (!j.contains("p") || !j["p"].is_number_integer() || j["p"].get<long long>() <= 0) {
      throw ParseError(kind + " needs a prime p");
    }
    return j["p"].get<std::uint64_t>();
  };
  try {
    // The short names match the command-line ring flags.
    if (kind == "Integer" || kind == "int") return Ring::integers();
    if (kind == "Rational" || kind == "rat") return Ring::rationals();
    if (kind == "PrimeField" || kind == "fp") return Ring::prime_field(prime());
    if (kind == "DualNumbers" || kind == "dual") return Ring::dual_numbers(prime());
    if (kind == "PolyOverInt" || kind == "poly") {
      if (!j.contains("variables") || !j["variables"].is_array()) throw ParseError("PolyOverInt needs variables");
      std::vector<std::string> vars;
      for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw ParseError("variable names must be strings");
        vars.push_back(v.get<std::string>());
      }
      return Ring::polynomials(std::move(vars));
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown ring kind: " + kind);
}

inline Json to_json(const RingValue& v) {
  switch (v.ring().kind()) {
    case RingKind::Integer:
      return detail::integer_to_json(v.integer());
    case RingKind::Rational: {
      const auto& q = v.rational();
      if (denominator(q) == 1) return detail::integer_to_json(numerator(q));
      return numerator(q).str() + "/" + denominator(q).str();
    }
    case RingKind::PrimeField:
      return v.residue();
    case RingKind::DualNumbers:
      return Json::array({v.dual().a, v.dual().b});
    case RingKind::PolyOverInt: {
      Json out = Json::array();
      for (const auto& t : v.polynomial().terms()) {
        out.push_back(Json::array({detail::integer_to_json(t.coeff), t.exponents}));
      }
      return out;
    }
  }
  return {};
}

inline RingValue value_from_json(const Ring& ring, const Json& j) {
  switch (ring.kind()) {
    case RingKind::Integer:
    case RingKind::PrimeField:
      return ring.from_integer(detail::integer_from_json(j));
    case RingKind::Rational: {
      if (j.is_string()) {
        const auto s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
          Integer num = detail::integer_from_json(s.substr(0, slash));
          Integer den = detail::integer_from_json(s.substr(slash + 1));
          if (den == 0) throw ParseError("zero denominator");
          return ring.from_rational(Rational(num) / Rational(den));
        }
      }
      return ring.from_integer(detail::integer_from_json(j));
    }
    case RingKind::DualNumbers: {
      if (j.is_array()) {
        if (j.size() != 2) throw ParseError("dual number must be [a, b]");
        RingValue a = ring.from_integer(detail::integer_from_json(j[0]));
        RingValue b = ring.from_integer(detail::integer_from_json(j[1]));
        return a + b * ring.epsilon();
      }
      return ring.from_integer(detail::integer_from_json(j));
    }
    case RingKind::PolyOverInt: {
      if (!j.is_array()) return ring.from_integer(detail::integer_from_json(j));
      std::vector<Polynomial::Term> terms;
      for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_array()) throw ParseError("polynomial term must be [coeff, [exponents]]");
        Monomial m;
        for (const auto& e : t[1]) {
          if (!e.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
          m.push_back(e.get<std::uint32_t>());
        }
        terms.push_back({std::move(m), detail::integer_from_json(t[0])});
      }
      try {
        return ring.from_polynomial(Polynomial::from_terms(ring.num_vars(), std::move(terms)));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
    }
  }
  throw ParseError("unknown ring kind");
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"ring", to_json(m.ring())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// Parses a matrix together with its embedded ring descriptor.
inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ParseError("matrix needs ring, rows, cols and entries");
  }
  Ring ring = ring_from_json(j["ring"]);
  const auto rows = detail::size_from_json(j["rows"], "rows");
  const auto cols = detail::size_from_json(j["cols"], "cols");
  const auto& e = j["entries"];
  if (!e.is_array() || e.size() != rows) throw ParseError("entries must have one array per row");
  std::vector<RingValue> values;
  values.reserve(rows * cols);
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != cols) throw ParseError("every row must have cols entries");
    for (const auto& v : row) values.push_back(value_from_json(ring, v));
  }
  return Matrix(ring, rows, cols, std::move(values));
}

}  // namespace grembed

#endif  // GREMBED_SERIALIZE_HPP
