/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "poly.hpp"

using namespace fermatlab;

namespace {

Polynomial random_poly(std::mt19937_64& gen, int max_terms = 6) {
  std::vector<Term> terms;
  const int n = 1 + static_cast<int>(gen() % max_terms);
  for (int i = 0; i < n; ++i) {
    Term t;
    t.coeff = Rational(static_cast<long>(gen() % 21) - 10);
    for (auto& e : t.exp) e = 0;
    for (int j = 0; j < 3; ++j)
      t.exp[gen() % kNumVars] += static_cast<std::uint32_t>(gen() % 3);
    terms.push_back(std::move(t));
  }
  return Polynomial::from_terms(std::move(terms));
}

const Polynomial x = Polynomial::variable(Var::X);
const Polynomial a = Polynomial::variable(Var::A);
const Polynomial b = Polynomial::variable(Var::B);

}  // namespace

TEST_CASE("canonical form basics") {
  CHECK(Polynomial{}.is_zero());
  CHECK(Polynomial{}.to_string() == "0");
  CHECK((x - x).is_zero());
  CHECK((x + a - x) == a);
  const Polynomial q = Polynomial::constant(2) * x + b - a;
  CHECK(q.to_string() == "2*x - a + b");
  CHECK(q.degree() == 1);
  CHECK(q.homogeneous_degree() == 1);
  CHECK((q - q).homogeneous_degree() == std::nullopt);
}

TEST_CASE("ring properties on random polynomials") {
  std::mt19937_64 gen(42);
  for (int i = 0; i < 200; ++i) {
    const Polynomial q1 = random_poly(gen);
    const Polynomial q2 = random_poly(gen);
    const Polynomial q3 = random_poly(gen);
    CHECK((q1 + q2) - q2 == q1);
    CHECK(q1 * q2 == q2 * q1);
    CHECK(q1 * (q2 + q3) == q1 * q2 + q1 * q3);
    CHECK(q1.pow(2) == q1 * q1);
  }
}

TEST_CASE("serialization round-trips") {
  std::mt19937_64 gen(4242);
  for (int i = 0; i < 300; ++i) {
    const Polynomial q = random_poly(gen);
    CHECK(Polynomial::parse(q.to_string()) == q);
  }
  CHECK(Polynomial::parse("0").is_zero());
  CHECK(Polynomial::parse("2*x - a + b") ==
        Polynomial::constant(2) * x + b - a);
  CHECK(Polynomial::parse("3/2*x^2*a - 1") ==
        Polynomial::monomial(Rational(3, 2), {2, 0, 0, 1, 0, 0, 0}) -
            Polynomial::constant(1));
  CHECK_THROWS_AS(Polynomial::parse("2*q"), DomainError);
  CHECK_THROWS_AS(Polynomial::parse(""), DomainError);
}

TEST_CASE("substitution example: y - b at y = x + b - a") {
  const Polynomial y = Polynomial::variable(Var::Y);
  const Polynomial result = (y - b).substitute(Var::Y, x + b - a);
  CHECK(result == x - a);
}

TEST_CASE("evaluation") {
  const Polynomial q = (x - a).pow(3);
  CHECK(q.evaluate_integer({{Var::X, Integer(2)}, {Var::A, Integer(1)}}) == 1);
  CHECK_THROWS_AS(q.evaluate({{Var::X, Integer(2)}}), DomainError);
  const Polynomial half = Polynomial::monomial(Rational(1, 2), {1, 0, 0, 0, 0, 0, 0});
  CHECK(half.evaluate({{Var::X, Integer(3)}}) == Rational(3, 2));
  CHECK_THROWS_AS(half.evaluate_integer({{Var::X, Integer(3)}}),
                  IntegrityError);
}

TEST_CASE("content example") {
  // 6abx + 3ab^2 - 3a^2 b -> coefficient gcd 3, monomial gcd a*b
  const Polynomial q = Polynomial::constant(6) * a * b * x +
                       Polynomial::constant(3) * a * b * b -
                       Polynomial::constant(3) * a * a * b;
  const auto c = q.content();
  CHECK(c.coefficient_gcd == 3);
  Exponents ab{};
  ab[static_cast<std::size_t>(Var::A)] = 1;
  ab[static_cast<std::size_t>(Var::B)] = 1;
  CHECK(c.monomial_gcd == ab);
}

TEST_CASE("exact division") {
  SUBCASE("difference of squares") {
    CHECK(exact_quotient(x * x - a * a, x - a) == x + a);
  }
  SUBCASE("the p = 3 gap factorization") {
    const Polynomial num = Polynomial::constant(3) * a * b *
                           (Polynomial::constant(2) * x + b - a);
    const Polynomial den = Polynomial::constant(3) * a * b;
    CHECK(exact_quotient(num, den) ==
          Polynomial::constant(2) * x + b - a);
  }
  SUBCASE("non-divisible reports the remainder") {
    const ExactDivision d = exact_divide(x, a);
    CHECK_FALSE(d.quotient.has_value());
    CHECK(d.remainder == x);
    CHECK_THROWS_AS(exact_quotient(x, a), DomainError);
  }
  SUBCASE("division by zero") {
    CHECK_THROWS_AS(exact_divide(x, Polynomial{}), DomainError);
  }
  SUBCASE("random products divide exactly") {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 100; ++i) {
      const Polynomial q1 = random_poly(gen);
      Polynomial q2 = random_poly(gen);
      if (q2.is_zero()) q2 = Polynomial::constant(1);
      const ExactDivision d = exact_divide(q1 * q2, q2);
      REQUIRE(d.quotient.has_value());
      CHECK(*d.quotient == q1);
      CHECK(d.remainder.is_zero());
    }
  }
}

TEST_CASE("build_fg closed forms for small p") {
  SUBCASE("p = 3") {
    const GapSplit s = build_fg(OddPrime(3ul));
    CHECK(s.f == Polynomial::constant(6) * a * b * x);
    CHECK(s.g_closed == Polynomial::constant(3) * a * b * b -
                            Polynomial::constant(3) * a * a * b);
    // literal summation display of g lacks the alternating sign
    CHECK(s.g_sum == Polynomial::constant(-3) * a * b * b -
                         Polynomial::constant(3) * a * a * b);
  }
  SUBCASE("p = 5 matches the stated product forms") {
    const GapSplit s = build_fg(OddPrime(5ul));
    const Polynomial f5 =
        Polynomial::constant(5) * a * b *
        (Polynomial::constant(4) * x.pow(3) -
         Polynomial::constant(6) * a * x.pow(2) +
         Polynomial::constant(4) * a * a * x +
         Polynomial::constant(6) * b * x.pow(2) +
         Polynomial::constant(4) * b * b * x -
         Polynomial::constant(6) * a * b * x);
    CHECK(s.f == f5);
    const Polynomial g5 = Polynomial::constant(5) * a * b *
                          (b.pow(3) - Polynomial::constant(2) * a * b * b +
                           Polynomial::constant(2) * a * a * b - a.pow(3));
    CHECK(s.g_closed == g5);
  }
}

TEST_CASE("fermat_gap closed forms and identities") {
  CHECK(fermat_gap(2) == Polynomial::constant(2) * a * b);
  CHECK(fermat_gap(3) == Polynomial::constant(6) * a * b * x +
                             Polynomial::constant(3) * a * b * b -
                             Polynomial::constant(3) * a * a * b);
  CHECK(fermat_gap(5).evaluate_integer(
            {{Var::X, Integer(1)}, {Var::A, Integer(1)}, {Var::B, Integer(1)}}) ==
        30);
  CHECK_THROWS_AS(fermat_gap(4), DomainError);
  CHECK_THROWS_AS(fermat_gap(1), DomainError);

  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
    const GapSplit s = build_fg(OddPrime(p));
    const Polynomial gap = fermat_gap(p);
    CHECK(gap == s.f + s.g_closed);
    CHECK(gap.homogeneous_degree() == p);
  }
}

TEST_CASE("fermat_gap agrees with direct integer computation") {
  std::mt19937_64 gen(123);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 13ul}) {
    const Polynomial gap = fermat_gap(p);
    for (int i = 0; i < 100; ++i) {
      const Integer xv(static_cast<unsigned long>(gen() % 10000));
      const Integer av(static_cast<unsigned long>(gen() % 10000));
      const Integer bv(static_cast<unsigned long>(gen() % 10000));
      const Integer yv = xv + bv - av;
      const Integer zv = xv + bv;
      const Integer direct = integer_pow(xv + yv - zv, p) -
                             (integer_pow(xv, p) + integer_pow(yv, p) -
                              integer_pow(zv, p));
      CHECK(gap.evaluate_integer({{Var::X, xv}, {Var::A, av}, {Var::B, bv}}) ==
            direct);
    }
  }
}

TEST_CASE("k_poly division and explicit forms") {
  const Polynomial k3 = Polynomial::constant(2) * x + b - a;
  CHECK(k_poly(OddPrime(3ul), KMethod::Division) == k3);
  CHECK(k_poly(OddPrime(3ul), KMethod::Explicit) == k3);
  CHECK(k_poly(OddPrime(3ul), KMethod::Division).to_string() == "2*x - a + b");

  CHECK(k_poly(OddPrime(5ul), KMethod::Division)
            .evaluate_integer({{Var::X, Integer(1)},
                               {Var::A, Integer(1)},
                               {Var::B, Integer(1)}}) == 6);

  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
    const Polynomial kd = k_poly(OddPrime(p), KMethod::Division);
    CHECK(kd == k_poly(OddPrime(p), KMethod::Explicit));
    CHECK(kd.homogeneous_degree() == p - 2);
    CHECK(kd.is_integral());
    const auto c = kd.content();
    CHECK(c.coefficient_gcd == 1);
    CHECK(c.monomial_gcd == kNoVars);
    // the gap itself carries exactly the factor p*a*b
    const auto gc = fermat_gap(p).content();
    CHECK(gc.coefficient_gcd == Rational(static_cast<long>(p)));
    Exponents ab{};
    ab[static_cast<std::size_t>(Var::A)] = 1;
    ab[static_cast<std::size_t>(Var::B)] = 1;
    CHECK(gc.monomial_gcd == ab);
  }
}

TEST_CASE("k_mod_p reductions") {
  SUBCASE("p = 3") {
    const KModP km = k_mod_p(OddPrime(3ul));
    CHECK(km.reduced == a + b);
    CHECK(km.h.is_zero());
  }
  SUBCASE("p = 5") {
    const KModP km = k_mod_p(OddPrime(5ul));
    CHECK(km.reduced == Polynomial::parse("a^3 + 2*a^2*b + 2*a*b^2 + b^3"));
    CHECK(km.h == Polynomial::parse("2*a^2*b + 2*a*b^2"));
    // value check: at a = 5 (residue 0) and b = 2 only b^3 = 8 survives
    const Integer v = km.reduced.evaluate_integer(
        {{Var::A, Integer(0)}, {Var::B, Integer(2)}});
    CHECK(v == 8);
    CHECK(v % 5 == 3);
    const Integer v2 = km.reduced.evaluate_integer(
        {{Var::A, Integer(5)}, {Var::B, Integer(2)}});
    CHECK(v2 % 5 == 3);
  }
}

TEST_CASE("mod-p coefficient reduction") {
  const Polynomial q = Polynomial::constant(7) * x - Polynomial::constant(3) * a;
  CHECK(q.coefficients_mod(5) ==
        Polynomial::constant(2) * x + Polynomial::constant(2) * a);
  const Polynomial half = Polynomial::monomial(Rational(1, 2), {1, 0, 0, 0, 0, 0, 0});
  // 1/2 mod 5 is 3
  CHECK(half.coefficients_mod(5) == Polynomial::constant(3) * x);
  const Polynomial third = Polynomial::monomial(Rational(1, 3), {1, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(third.coefficients_mod(3), DomainError);
}

TEST_CASE("parity structure of K_5 mod 2") {
  const Polynomial k5 = k_poly(OddPrime(5ul), KMethod::Division);
  CHECK(k5.coefficients_mod(2) == Polynomial::parse("a^3 + b^3"));
  // as integer-valued functions mod 2 this is a + b: odd iff exactly one of
  // a, b is even
  std::mt19937_64 gen(31337);
  for (int i = 0; i < 500; ++i) {
    const Integer xv(static_cast<unsigned long>(gen() % 100000 + 1));
    const Integer av(static_cast<unsigned long>(gen() % 100000 + 1));
    const Integer bv(static_cast<unsigned long>(gen() % 100000 + 1));
    const Integer kv = k5.evaluate_integer(
        {{Var::X, xv}, {Var::A, av}, {Var::B, bv}});
    CHECK((kv % 2 != 0) == ((av + bv) % 2 != 0));
  }
  // at x = a = b = 1 the value is even, so K_5 is not unconditionally odd
  CHECK(k5.evaluate_integer({{Var::X, Integer(1)},
                             {Var::A, Integer(1)},
                             {Var::B, Integer(1)}}) == 6);
}

TEST_CASE("sampled little-theorem congruence in the gap frame") {
  std::mt19937_64 gen(2024);
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 31ul}) {
    for (int i = 0; i < 200; ++i) {
      const Integer xv(static_cast<unsigned long>(gen()));
      const Integer yv(static_cast<unsigned long>(gen()));
      const Integer zv(static_cast<unsigned long>(gen()));
      const Integer lhs = integer_pow(xv + yv - zv, p);
      const Integer rhs =
          integer_pow(xv, p) + integer_pow(yv, p) - integer_pow(zv, p);
      CHECK((lhs - rhs) % p == 0);
    }
  }
}

TEST_CASE("explicit construction raises on a broken transcription") {
  // Guard for the integrity contract: the shipped expansion is integral for
  // every odd prime in the working range.
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul})
    CHECK_NOTHROW(k_poly(OddPrime(p), KMethod::Explicit));
}
