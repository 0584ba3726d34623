/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arith.hpp"

using namespace fermatlab;

TEST_CASE("integer_root examples") {
  CHECK(integer_root(Integer(27), 3).root == 3);
  CHECK(integer_root(Integer(27), 3).exact);
  CHECK(integer_root(Integer(26), 3).root == 2);
  CHECK_FALSE(integer_root(Integer(26), 3).exact);
  CHECK(integer_root(Integer(1), 5).root == 1);
  CHECK(integer_root(Integer(1), 5).exact);
  CHECK(integer_root(Integer(0), 7).root == 0);
  CHECK(integer_root(Integer(0), 7).exact);
  CHECK_THROWS_AS(integer_root(Integer(5), 0), DomainError);
  CHECK_THROWS_AS(integer_root(Integer(-5), 2), DomainError);
}

TEST_CASE("integer_root bracket property and library cross-check") {
  std::mt19937_64 gen(20260810);
  for (int i = 0; i < 400; ++i) {
    Integer n(static_cast<unsigned long>(gen()));
    n = n * Integer(static_cast<unsigned long>(gen())) + Integer(static_cast<unsigned long>(gen() % 1000));
    const unsigned long k = 1 + gen() % 9;
    const RootResult r = integer_root(n, k);
    CHECK(integer_pow(r.root, k) <= n);
    CHECK(integer_pow(r.root + 1, k) > n);
    CHECK(r.exact == (integer_pow(r.root, k) == n));
    // independent oracle: the GMP root routine
    Integer expected;
    const int exact = mpz_root(expected.get_mpz_t(), n.get_mpz_t(), k);
    CHECK(r.root == expected);
    CHECK(r.exact == (exact != 0));
  }
}

TEST_CASE("integer_root recovers planted powers") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const Integer base(static_cast<unsigned long>(gen() % 100000 + 2));
    const unsigned long k = 2 + gen() % 7;
    const Integer n = integer_pow(base, k);
    const RootResult r = integer_root(n, k);
    CHECK(r.exact);
    CHECK(r.root == base);
    const RootResult below = integer_root(n - 1, k);
    CHECK_FALSE(below.root == base);
  }
}

TEST_CASE("signed_integer_root") {
  CHECK(signed_integer_root(Integer(-27), 3).root == -3);
  CHECK(signed_integer_root(Integer(-27), 3).exact);
  CHECK_FALSE(signed_integer_root(Integer(-26), 3).exact);
  CHECK_THROWS_AS(signed_integer_root(Integer(-4), 2), DomainError);
}

TEST_CASE("p_adic_valuation examples") {
  CHECK(p_adic_valuation(Integer(21), Integer(3)) == 1);
  CHECK(p_adic_valuation(Integer(18), Integer(3)) == 2);
  CHECK(p_adic_valuation(Integer(7), Integer(3)) == 0);
  CHECK(p_adic_valuation(Integer(-24), Integer(2)) == 3);
  CHECK_THROWS_AS(p_adic_valuation(Integer(0), Integer(3)), DomainError);
  CHECK_THROWS_AS(p_adic_valuation(Integer(10), Integer(4)), DomainError);
}

TEST_CASE("p_adic_valuation is additive and matches a division loop") {
  std::mt19937_64 gen(99);
  const Integer primes[] = {Integer(2), Integer(3), Integer(5), Integer(7)};
  for (int i = 0; i < 300; ++i) {
    const Integer& q = primes[gen() % 4];
    Integer m(static_cast<unsigned long>(gen() % 100000 + 1));
    Integer n(static_cast<unsigned long>(gen() % 100000 + 1));
    CHECK(p_adic_valuation(m * n, q) ==
          p_adic_valuation(m, q) + p_adic_valuation(n, q));
    // naive loop oracle
    unsigned long v = 0;
    Integer reduced = m;
    while (reduced % q == 0) {
      reduced /= q;
      ++v;
    }
    CHECK(p_adic_valuation(m, q) == v);
  }
}

TEST_CASE("binomial examples and Pascal oracle") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK_THROWS_AS(binomial(3, 4), DomainError);

  // Pascal triangle oracle
  std::vector<std::vector<Integer>> pascal(40);
  for (unsigned long n = 0; n < 40; ++n) {
    pascal[n].resize(n + 1);
    pascal[n][0] = pascal[n][n] = 1;
    for (unsigned long i = 1; i < n; ++i)
      pascal[n][i] = pascal[n - 1][i - 1] + pascal[n - 1][i];
  }
  for (unsigned long n = 0; n < 40; ++n)
    for (unsigned long i = 0; i <= n; ++i)
      CHECK(binomial(n, i) == pascal[n][i]);
}

TEST_CASE("prime p divides binomial(p, i) for 0 < i < p") {
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 31ul}) {
    for (unsigned long i = 1; i < p; ++i)
      CHECK(binomial(p, i) % p == 0);
  }
}

TEST_CASE("is_prime against a sieve") {
  std::vector<bool> composite(20000, false);
  for (unsigned long i = 2; i < composite.size(); ++i) {
    if (composite[i]) continue;
    for (unsigned long j = i * i; j < composite.size(); j += i)
      composite[j] = true;
  }
  for (unsigned long n = 0; n < composite.size(); ++n)
    CHECK(is_prime(Integer(n)) == (n >= 2 && !composite[n]));
}

TEST_CASE("is_prime on larger classified inputs") {
  CHECK(is_prime(Integer("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(Integer("147573952589676412927")));  // 2^67 - 1
  CHECK_FALSE(is_prime(Integer(561)));   // Carmichael
  CHECK_FALSE(is_prime(Integer(41041))); // Carmichael
  CHECK(is_prime(Integer("18446744073709551557")));
  CHECK_FALSE(is_prime(Integer("18446744073709551555")));
}

TEST_CASE("OddPrime validation") {
  CHECK(OddPrime(3ul).half() == 1);
  CHECK(OddPrime(31ul).half() == 15);
  CHECK_THROWS_AS(OddPrime(2ul), DomainError);
  CHECK_THROWS_AS(OddPrime(9ul), DomainError);
  CHECK_THROWS_AS(OddPrime(1ul), DomainError);
  CHECK_THROWS_AS(OddPrime(Integer(-7)), DomainError);
}
