/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fermatlab {

/// The universal scalar: an exact arbitrary-precision signed integer.
using Integer = mpz_class;
/// Exact rational, used for polynomial coefficients.
using Rational = mpq_class;

/// Bad mathematical input: a violated precondition or an out-of-domain value.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency failure. Raised when a quantity the library derives
/// two ways fails to agree; never caused by user input.
struct IntegrityError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Work refused because it would exceed a configured budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic primality test. Trial division by all primes below 2^16
/// (complete for n < 2^32), then a fixed Miller-Rabin witness set that is
/// deterministic for n < 3.317e24. Larger inputs are refused rather than
/// answered probabilistically.
bool is_prime(const Integer& n);

/// An odd prime p together with k = (p-1)/2. Construction validates.
class OddPrime {
 public:
  explicit OddPrime(const Integer& p);
  explicit OddPrime(unsigned long p) : OddPrime(Integer(p)) {}

  unsigned long value() const { return p_; }
  /// k = (p-1)/2
  unsigned long half() const { return k_; }
  Integer as_integer() const { return Integer(p_); }

  friend bool operator==(const OddPrime& lhs, const OddPrime& rhs) {
    return lhs.p_ == rhs.p_;
  }

 private:
  unsigned long p_ = 0;
  unsigned long k_ = 0;
};

struct RootResult {
  Integer root;
  bool exact;
};

/// Floor k-th root of n >= 0 with an exactness flag. Newton iteration on
/// integers followed by an exact correction loop; no floating point.
RootResult integer_root(const Integer& n, unsigned long k);

/// Signed k-th root for odd k (negative n allowed). For even k, n must be
/// non-negative.
RootResult signed_integer_root(const Integer& n, unsigned long k);

/// Largest v with q^v | n, for n != 0 and q prime.
unsigned long p_adic_valuation(const Integer& n, const Integer& q);

/// Exact binomial coefficient; requires i <= n.
Integer binomial(unsigned long n, unsigned long i);

/// n^e over Integer.
Integer integer_pow(const Integer& n, unsigned long e);

}  // namespace fermatlab
