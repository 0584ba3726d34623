/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "forms.hpp"

using namespace fermatlab;

TEST_CASE("phi examples") {
  CHECK(phi(OddPrime(3ul), Integer(2), Integer(1)) == 7);
  CHECK(phi(OddPrime(3ul), Integer(1), Integer(1)) == 3);
  CHECK(phi(OddPrime(3ul), Integer(2), Integer(-1)) == 3);
  CHECK(phi(OddPrime(5ul), Integer(6), Integer(1)) == 1555);
  CHECK(phi(OddPrime(5ul), Integer(0), Integer(0)) == 0);
}

TEST_CASE("phi is the quotient of the power difference") {
  std::mt19937_64 gen(1);
  for (unsigned long pv : {3ul, 5ul, 7ul, 13ul}) {
    const OddPrime p(pv);
    for (int i = 0; i < 200; ++i) {
      Integer u(static_cast<unsigned long>(gen() % 100000));
      Integer v(static_cast<unsigned long>(gen() % 100000));
      if (gen() & 1) u = -u;
      if (gen() & 1) v = -v;
      CHECK((u - v) * phi(p, u, v) == integer_pow(u, pv) - integer_pow(v, pv));
    }
  }
}

TEST_CASE("splitting identity") {
  std::mt19937_64 gen(2);
  for (unsigned long n : {2ul, 3ul, 5ul, 8ul, 13ul}) {
    for (int i = 0; i < 100; ++i) {
      Integer z(static_cast<unsigned long>(gen() % 1000000));
      Integer y(static_cast<unsigned long>(gen() % 1000000));
      if (gen() & 1) z = -z;
      if (gen() & 1) y = -y;
      const Integer lhs = integer_pow(z, n) - integer_pow(y, n);
      const Integer rhs =
          (z - y) * (integer_pow(z, n - 1) + integer_pow(y, n - 1)) +
          z * y * (integer_pow(z, n - 2) - integer_pow(y, n - 2));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("ad_forms examples") {
  SUBCASE("plain (3, 2, 1)") {
    const FormPair f = ad_forms(OddPrime(3ul), Integer(2), Integer(1), false);
    CHECK(f.A == 5);
    CHECK(f.D == 1);
    CHECK(f.phi == 7);
    CHECK(f.k == 1);
    CHECK(f.A + 2 == f.phi);      // A + (zy)^k
    CHECK(f.D + 3 * 2 == f.phi);  // D + p(zy)^k
  }
  SUBCASE("plain (3, 1, 1): equal arguments kill D") {
    const FormPair f = ad_forms(OddPrime(3ul), Integer(1), Integer(1), false);
    CHECK(f.A == 2);
    CHECK(f.D == 0);
    CHECK(f.phi == 3);
  }
  SUBCASE("alternating (3, 2, 1)") {
    const FormPair f = ad_forms(OddPrime(3ul), Integer(2), Integer(1), true);
    CHECK(f.A == 5);
    CHECK(f.D == 1);
    CHECK(f.phi == 3);  // phi(2, -1)
    // phi = A + (-1)^k (xy)^k with k = 1, and phi = D + (xy)^k
    CHECK(f.A - 2 == f.phi);
    CHECK(f.D + 2 == f.phi);
  }
}

TEST_CASE("form pair invariants hold on signed and zero inputs") {
  std::mt19937_64 gen(3);
  for (unsigned long pv : {3ul, 5ul, 7ul, 13ul, 31ul}) {
    const OddPrime p(pv);
    const unsigned long k = p.half();
    for (int i = 0; i < 150; ++i) {
      Integer u(static_cast<unsigned long>(gen() % 1000));
      Integer v(static_cast<unsigned long>(gen() % 1000));
      if (i == 0) u = 0;
      if (i == 1) v = 0;
      if (gen() & 1) u = -u;
      if (gen() & 1) v = -v;
      const Integer uvk = integer_pow(u * v, k);

      const FormPair plain = ad_forms(p, u, v, false);
      CHECK(plain.phi == plain.A + uvk);
      CHECK(plain.phi == plain.D + Integer(pv) * uvk);
      CHECK(plain.phi == phi(p, u, v));

      const FormPair alt = ad_forms(p, u, v, true);
      const Integer signed_uvk = (k % 2 == 1) ? Integer(-uvk) : uvk;
      CHECK(alt.phi == alt.A + signed_uvk);
      CHECK(alt.phi == alt.D + uvk);
      CHECK(alt.phi == phi(p, u, -v));
    }
  }
}

TEST_CASE("classify_gcd examples") {
  SUBCASE("(3, 1, 4): shared factor 3") {
    const GcdClass g = classify_gcd(OddPrime(3ul), Integer(1), Integer(4));
    CHECK(g.g == 3);
    CHECK(g.phi_valuation == 1);
    CHECK(g.divides);
  }
  SUBCASE("(3, 2, 3): adjacent arguments") {
    const GcdClass g = classify_gcd(OddPrime(3ul), Integer(2), Integer(3));
    CHECK(g.g == 1);
    CHECK(g.phi_valuation == 0);
    CHECK_FALSE(g.divides);
  }
  SUBCASE("(5, 1, 6): phi = 1555 = 5 * 311") {
    const GcdClass g = classify_gcd(OddPrime(5ul), Integer(1), Integer(6));
    CHECK(g.g == 5);
    CHECK(g.phi_valuation == 1);
    CHECK(g.divides);
  }
}

TEST_CASE("classify_gcd rejects bad inputs") {
  CHECK_THROWS_AS(classify_gcd(OddPrime(3ul), Integer(2), Integer(4)),
                  DomainError);  // not coprime
  CHECK_THROWS_AS(classify_gcd(OddPrime(3ul), Integer(4), Integer(3)),
                  DomainError);  // y >= z
  CHECK_THROWS_AS(classify_gcd(OddPrime(3ul), Integer(0), Integer(3)),
                  DomainError);  // y <= 0
}

TEST_CASE("gcd lemma on a small exhaustive window") {
  for (unsigned long pv : {3ul, 5ul, 7ul}) {
    const OddPrime p(pv);
    for (unsigned long z = 2; z <= 60; ++z) {
      for (unsigned long y = 1; y < z; ++y) {
        if (std::gcd(y, z) != 1) continue;
        const GcdClass g = classify_gcd(p, Integer(y), Integer(z));
        const bool is_p = g.g == Integer(pv);
        CHECK((g.g == 1 || is_p));
        CHECK(is_p == ((z - y) % pv == 0));
        if (g.divides) CHECK(g.phi_valuation == 1);
      }
    }
  }
}
