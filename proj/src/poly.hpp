/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace fermatlab {

/// The closed variable universe. The numeric value is the ranking used by
/// the canonical term order (X highest).
enum class Var : std::uint8_t { X = 0, Y, Z, A, B, C, R };

inline constexpr std::size_t kNumVars = 7;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Exponents = std::array<std::uint32_t, kNumVars>;

inline constexpr Exponents kNoVars{};

unsigned long total_degree(const Exponents& e);

/// Graded-lexicographic order: by total degree, ties broken lexicographically
/// with x > y > z > a > b > c > R.
bool grlex_less(const Exponents& lhs, const Exponents& rhs);

struct Term {
  Rational coeff;
  Exponents exp;
};

/// Sparse multivariate polynomial with exact rational coefficients over the
/// fixed variable universe. Canonical form: terms sorted in descending
/// graded-lex order, no zero coefficients, no repeated exponent maps. The
/// zero polynomial is the empty term sequence.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Rational c);
  static Polynomial constant(const Integer& c) { return constant(Rational(c)); }
  static Polynomial constant(long c) { return constant(Rational(c)); }
  static Polynomial variable(Var v);
  static Polynomial monomial(Rational coeff, const Exponents& exp);
  /// Builds canonical form from an arbitrary term list.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Max total degree; 0 for the zero polynomial.
  unsigned long degree() const;
  /// Total degree shared by every term, if any (zero polynomial: empty).
  std::optional<unsigned long> homogeneous_degree() const;
  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial pow(unsigned long e) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// Replaces every occurrence of v by the polynomial r.
  Polynomial substitute(Var v, const Polynomial& r) const;

  /// Exact evaluation; every variable occurring in the polynomial must be
  /// bound or a DomainError is raised.
  Rational evaluate(const std::map<Var, Integer>& point) const;
  /// Evaluation that must land on an integer (raises IntegrityError if not).
  Integer evaluate_integer(const std::map<Var, Integer>& point) const;

  struct Content {
    Rational coefficient_gcd;  // positive; 0 for the zero polynomial
    Exponents monomial_gcd;    // componentwise min exponent
  };
  Content content() const;

  /// Coefficients reduced into [0, p-1]. Rational coefficients are mapped via
  /// the modular inverse of the denominator (which must be a unit mod p).
  Polynomial coefficients_mod(unsigned long p) const;

  /// Canonical text: terms in canonical order, e.g. "2*x - a + b",
  /// "3/2*x^2*a - 1". Zero polynomial prints "0".
  std::string to_string() const;
  /// Parses the canonical text form (round-trips with to_string).
  static Polynomial parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

struct ExactDivision {
  std::optional<Polynomial> quotient;  // set iff the division is exact
  Polynomial remainder;                // zero iff the division is exact
};

/// Single-divisor polynomial division. When den does not divide num, the
/// quotient is absent and the remainder is the first obstruction.
ExactDivision exact_divide(const Polynomial& num, const Polynomial& den);

/// Throwing variant: the quotient, or DomainError carrying the remainder text.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);

struct GapSplit {
  Polynomial f;         // the x-dependent part, from the first summation form
  Polynomial g_sum;     // the literal summation display for g (no sign flip)
  Polynomial g_closed;  // -(b-a)^p + b^p + (-a)^p, expanded
};

/// The split of the gap polynomial into its x-part f and constant-in-x part g.
GapSplit build_fg(const OddPrime& p);

/// (x-a)^p - (x^p + (x+b-a)^p - (x+b)^p), expanded over {x, a, b}. Accepts
/// p = 2 or any odd prime; homogeneous of total degree p.
Polynomial fermat_gap(unsigned long p);

enum class KMethod { Division, Explicit };

/// The degree-(p-2) quotient of the gap polynomial by p*a*b. Division builds
/// it by exact division; Explicit evaluates the double-sum expansion with
/// exact rational coefficients and asserts integrality (IntegrityError on a
/// transcription defect).
Polynomial k_poly(const OddPrime& p, KMethod method);

struct KModP {
  Polynomial reduced;  // k_poly with x -> a, coefficients in [0, p-1]
  Polynomial h;        // reduced - a^(p-2) - b^(p-2), coefficients mod p
};

KModP k_mod_p(const OddPrime& p);

/// Convenience monomial builders used throughout.
Polynomial var_pow(Var v, unsigned long e);

}  // namespace fermatlab
