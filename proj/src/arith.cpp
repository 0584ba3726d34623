/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "arith.hpp"

#include <array>
#include <vector>

namespace fermatlab {

namespace {

// Odd primes below 2^16, built once.
const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 1u << 16;
    std::vector<bool> composite(limit, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Witness set deterministic for n < 3'317'044'064'679'887'385'961'981.
constexpr std::array<unsigned long, 13> kMillerRabinWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const Integer& miller_rabin_limit() {
  static const Integer limit("3317044064679887385961981");
  return limit;
}

bool miller_rabin_witness(const Integer& n, unsigned long a) {
  // n odd, n > a. Returns true if a proves n composite.
  Integer d = n - 1;
  unsigned long r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++r;
  }
  Integer x;
  Integer base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : small_primes()) {
    Integer q(p);
    if (q * q > n) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == q;
  }
  // n has no factor below 2^16, so n >= 2^32 here.
  if (n >= miller_rabin_limit())
    throw DomainError(
        "is_prime: input exceeds the deterministic witness-set range");
  for (unsigned long a : kMillerRabinWitnesses) {
    if (miller_rabin_witness(n, a)) return false;
  }
  return true;
}

OddPrime::OddPrime(const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()))
    throw DomainError("OddPrime: value must be an odd prime >= 3");
  if (!p.fits_ulong_p())
    throw DomainError("OddPrime: value too large for this toolkit");
  if (!is_prime(p)) throw DomainError("OddPrime: value is not prime");
  p_ = p.get_ui();
  k_ = (p_ - 1) / 2;
}

Integer integer_pow(const Integer& n, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), e);
  return out;
}

RootResult integer_root(const Integer& n, unsigned long k) {
  if (k == 0) throw DomainError("integer_root: k must be >= 1");
  if (n < 0) throw DomainError("integer_root: n must be >= 0");
  if (n == 0) return {Integer(0), true};
  if (n == 1 || k == 1) return {n, true};
  const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x = Integer(1) << ((bits + k - 1) / k);  // x^k >= n
  while (true) {
    Integer t = ((k - 1) * x + n / integer_pow(x, k - 1)) / k;
    if (t >= x) break;
    x = t;
  }
  // Newton on integers can stop one off; correct exactly.
  while (integer_pow(x, k) > n) --x;
  while (integer_pow(x + 1, k) <= n) ++x;
  return {x, integer_pow(x, k) == n};
}

RootResult signed_integer_root(const Integer& n, unsigned long k) {
  if (n >= 0) return integer_root(n, k);
  if (k % 2 == 0)
    throw DomainError("signed_integer_root: negative n with even k");
  RootResult r = integer_root(-n, k);
  if (r.exact) return {-r.root, true};
  // floor semantics for negatives: -(root+1) when inexact
  return {-(r.root + 1), false};
}

unsigned long p_adic_valuation(const Integer& n, const Integer& q) {
  if (n == 0) throw DomainError("p_adic_valuation: n must be nonzero");
  if (!is_prime(q)) throw DomainError("p_adic_valuation: q must be prime");
  Integer reduced;
  return static_cast<unsigned long>(
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

Integer binomial(unsigned long n, unsigned long i) {
  if (i > n) throw DomainError("binomial: require i <= n");
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, i);
  return out;
}

}  // namespace fermatlab
