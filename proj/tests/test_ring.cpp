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


#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "grembed/random.hpp"
#include "grembed/ring.hpp"
#include "grembed/serialize.hpp"

namespace grembed {
namespace {

std::vector<Ring> all_kinds() {
  return {Ring::integers(),       Ring::rationals(),       Ring::prime_field(2), Ring::prime_field(5),
          Ring::dual_numbers(2),  Ring::dual_numbers(3),   Ring::polynomials({"x", "y"})};
}

TEST(Ring, CharacteristicTwo) {
  Ring f2 = Ring::prime_field(2);
  EXPECT_TRUE((f2.one() + f2.one()).is_zero());
}

TEST(Ring, DualSquareLosesEpsilonInCharTwo) {
  Ring d = Ring::dual_numbers(2);
  RingValue x = d.one() + d.epsilon();
  EXPECT_EQ(x * x, d.one());
}

TEST(Ring, DifferenceOfSquares) {
  Ring z = Ring::polynomials({"X"});
  RingValue x = z.variable(0);
  EXPECT_EQ((x + z.one()) * (x - z.one()), x * x - z.one());
  EXPECT_EQ(((x + z.one()) * (x - z.one())).to_string(), "X^2 - 1");
}

TEST(Ring, MismatchThrows) {
  EXPECT_THROW(Ring::prime_field(2).one() + Ring::prime_field(3).one(), RingMismatch);
  EXPECT_THROW(Ring::integers().one() * Ring::rationals().one(), RingMismatch);
  EXPECT_THROW(Ring::polynomials({"x"}).one() + Ring::polynomials({"y"}).one(), RingMismatch);
}

TEST(Ring, DescriptorValidation) {
  EXPECT_THROW(Ring::prime_field(4), InvalidArgument);
  EXPECT_THROW(Ring::dual_numbers(1), InvalidArgument);
  EXPECT_THROW(Ring::polynomials({"x", "x"}), InvalidArgument);
  EXPECT_THROW(Ring::polynomials({""}), InvalidArgument);
  EXPECT_NO_THROW(Ring::prime_field(1000000007));
  EXPECT_TRUE(is_prime(2305843009213693951ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Ring, UnitsAndInverses) {
  Ring f5 = Ring::prime_field(5);
  EXPECT_TRUE(is_unit(f5.from_int(3)));
  EXPECT_EQ(inverse(f5.from_int(3)), f5.from_int(2));
  EXPECT_FALSE(is_unit(f5.zero()));
  EXPECT_THROW(inverse(f5.zero()), NotAUnit);

  Ring d2 = Ring::dual_numbers(2);
  EXPECT_FALSE(is_unit(d2.epsilon()));
  EXPECT_THROW(inverse(d2.epsilon()), NotAUnit);

  Ring z = Ring::integers();
  EXPECT_TRUE(is_unit(z.from_int(-1)));
  EXPECT_FALSE(is_unit(z.from_int(2)));

  Ring zx = Ring::polynomials({"x"});
  EXPECT_TRUE(is_unit(zx.from_int(-1)));
  EXPECT_FALSE(is_unit(zx.variable(0)));
  EXPECT_FALSE(is_unit(zx.from_int(3)));

  Ring q = Ring::rationals();
  EXPECT_EQ(inverse(q.from_rational(Rational(-2, 3))), q.from_rational(Rational(-3, 2)));
}

// Brute-force search for the inverse over the finite ring agrees with inverse().
TEST(Ring, DualInverseMatchesSearch) {
  for (std::uint64_t p : {2, 3, 5}) {
    Ring d = Ring::dual_numbers(p);
    for (const auto& x : enumerate_ring(d)) {
      std::vector<RingValue> found;
      for (const auto& y : enumerate_ring(d)) {
        if ((x * y).is_one()) found.push_back(y);
      }
      EXPECT_EQ(is_unit(x), found.size() == 1);
      if (is_unit(x)) EXPECT_EQ(inverse(x), found.front());
    }
  }
  Ring d2 = Ring::dual_numbers(2);
  EXPECT_EQ(inverse(d2.dual(1, 1)), d2.dual(1, 1));
}

TEST(Ring, EnumerateFinite) {
  EXPECT_EQ(enumerate_ring(Ring::prime_field(2)).size(), 2u);
  EXPECT_EQ(enumerate_ring(Ring::prime_field(3)).size(), 3u);
  auto d = enumerate_ring(Ring::dual_numbers(2));
  ASSERT_EQ(d.size(), 4u);
  Ring d2 = Ring::dual_numbers(2);
  EXPECT_EQ(d[0], d2.zero());
  EXPECT_EQ(d[1], d2.one());
  EXPECT_EQ(d[2], d2.epsilon());
  EXPECT_EQ(d[3], d2.dual(1, 1));
  EXPECT_THROW(enumerate_ring(Ring::integers()), InfiniteRing);
  EXPECT_THROW(enumerate_ring(Ring::polynomials({"x"})), InfiniteRing);
}

TEST(Ring, CanonicalForms) {
  Ring q = Ring::rationals();
  auto half = q.from_rational(Rational(-4) / Rational(-8));
  EXPECT_EQ(numerator(half.rational()), 1);
  EXPECT_EQ(denominator(half.rational()), 2);
  EXPECT_EQ(q.from_rational(Rational(3) / Rational(-6)).to_string(), "-1/2");
  Ring f7 = Ring::prime_field(7);
  EXPECT_EQ(f7.from_int(-1).residue(), 6u);
  EXPECT_EQ(f7.from_rational(Rational(1, 2)), f7.from_int(4));
  Ring zx = Ring::polynomials({"x"});
  EXPECT_TRUE((zx.variable(0) - zx.variable(0)).polynomial().terms().empty());
}

TEST(Ring, ExactQuotient) {
  Ring z = Ring::integers();
  EXPECT_EQ(exact_quotient(z.from_int(-12), z.from_int(4)), z.from_int(-3));
  EXPECT_THROW(exact_quotient(z.from_int(7), z.from_int(2)), NotAUnit);
  Ring zx = Ring::polynomials({"x", "y"});
  RingValue x = zx.variable(0), y = zx.variable(1);
  RingValue f = (x + y) * (x - zx.from_int(2) * y) * (x * y + zx.one());
  EXPECT_EQ(exact_quotient(f, x + y), (x - zx.from_int(2) * y) * (x * y + zx.one()));
  EXPECT_THROW(exact_quotient(f, x + zx.from_int(3)), NotAUnit);
  Ring d = Ring::dual_numbers(3);
  EXPECT_THROW(exact_quotient(d.epsilon(), d.epsilon()), NotAUnit);
}

// Ring axioms on random triples, every ring kind.
TEST(RingProperty, Axioms) {
  Rng rng(20261017);
  for (const auto& ring : all_kinds()) {
    for (int trial = 0; trial < 300; ++trial) {
      auto a = random_value(ring, rng), b = random_value(ring, rng), c = random_value(ring, rng);
      ASSERT_EQ((a + b) + c, a + (b + c)) << ring.to_string();
      ASSERT_EQ((a * b) * c, a * (b * c)) << ring.to_string();
      ASSERT_EQ(a * (b + c), a * b + a * c) << ring.to_string();
      ASSERT_EQ(a + b, b + a) << ring.to_string();
      ASSERT_EQ(a * b, b * a) << ring.to_string();
      ASSERT_EQ(a + ring.zero(), a);
      ASSERT_EQ(a * ring.one(), a);
      ASSERT_TRUE((a + (-a)).is_zero());
      ASSERT_EQ(a - b, a + (-b));
    }
  }
}

// Re-canonicalizing through the serialized form is the identity.
TEST(RingProperty, CanonicalIdempotence) {
  Rng rng(7);
  for (const auto& ring : all_kinds()) {
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_value(ring, rng, 1000);
      ASSERT_EQ(value_from_json(ring, to_json(a)), a) << a.to_string();
    }
  }
}

TEST(RingProperty, DualUnitNilpotentPartition) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& x : enumerate_ring(Ring::dual_numbers(p))) {
      EXPECT_EQ(is_unit(x), x.dual().a != 0);
      if (x.dual().a == 0) EXPECT_TRUE((x * x).is_zero());
    }
  }
}

// Evaluation Z[x, y, z] -> F_p is a ring homomorphism.
TEST(RingProperty, EvaluationHomomorphism) {
  Rng rng(99);
  Ring zx = Ring::polynomials({"x", "y", "z"});
  for (std::uint64_t p : {2, 3, 7}) {
    Ring fp = Ring::prime_field(p);
    for (int trial = 0; trial < 100; ++trial) {
      auto f = random_value(zx, rng), g = random_value(zx, rng);
      std::vector<RingValue> pt{random_value(fp, rng), random_value(fp, rng), random_value(fp, rng)};
      ASSERT_EQ(evaluate(f + g, pt, fp), evaluate(f, pt, fp) + evaluate(g, pt, fp));
      ASSERT_EQ(evaluate(f * g, pt, fp), evaluate(f, pt, fp) * evaluate(g, pt, fp));
    }
  }
}

TEST(RingProperty, PolynomialExactDivisionInvertsMultiplication) {
  Rng rng(3);
  Ring zx = Ring::polynomials({"a", "b", "c"});
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_value(zx, rng), g = random_value(zx, rng);
    if (g.is_zero()) continue;
    ASSERT_EQ(exact_quotient(f * g, g), f);
  }
}

}  // namespace
}  // namespace grembed
