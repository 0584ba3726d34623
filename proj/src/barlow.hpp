/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>

#include "arith.hpp"

namespace fermatlab {

/// Candidate triple for decomposition: 0 < x < y < z with gcd(x, y, z) = 1.
struct CandidateTriple {
  Integer x;
  Integer y;
  Integer z;
};

enum class Shape { None, Flt1, Flt2CaseI, Flt2CaseII };

const char* shape_name(Shape s);

struct VarValuations {
  unsigned long nu2;
  unsigned long nup;
};

/// True when n > 0 is a perfect p-th power (or, for signed helper below,
/// when |n| is and the sign admits it for odd p).
bool perfect_pth_power(const Integer& n, unsigned long p);
bool perfect_pth_power_signed(const Integer& n, unsigned long p);

/// Shape-form admission test for 2^(p*d) * p^(p*e-1) * (p-th power) with
/// d, e >= 1 (the first-difference form of Case I).
struct CaseIForm {
  bool admits = false;
  unsigned long d = 0;
  unsigned long e = 0;
  Integer cofactor_root;  // valid when admits
};
CaseIForm case_i_form(const Integer& n, unsigned long p);

/// Admission tests for the Case II forms: 2^(p*d) * (p-th power) with the
/// cofactor odd and coprime to p (strict reading), and p^(p*e-1) * (p-th
/// power) for the second difference. The loose reading lets the cofactor
/// root absorb extra factors of 2 (but never of both 2 and p).
struct CaseIIAForm {
  bool admits = false;  // strict: cofactor coprime to 2p
  unsigned long d = 0;
  Integer cofactor_root;
};
CaseIIAForm case_ii_a_form(const Integer& n, unsigned long p);

struct CaseIIBForm {
  bool admits_strict = false;  // cofactor odd
  bool admits_loose = false;   // cofactor 2-part folded into the root
  unsigned long e = 0;
  Integer cofactor_root;
};
CaseIIBForm case_ii_b_form(const Integer& n, unsigned long p);

struct ShapeComponents {
  // p-th roots of a, b, c and the three phi values, when exact.
  std::optional<Integer> r, s, t, r1, s1, t1;
  // Case I extraction for a.
  std::optional<unsigned long> case_i_d, case_i_e;
  std::optional<Integer> case_i_r_prime;
  // Case II extraction for a and b.
  std::optional<unsigned long> case_ii_d, case_ii_e;
  std::optional<Integer> case_ii_r0, case_ii_s_prime;
  // The two readings of the "2p does not divide the root" side condition.
  bool case_i_root_coprime_to_2_and_p = false;
  bool case_i_root_not_divisible_by_2p = false;
  bool case_ii_admits_strict = false;
  bool case_ii_admits_loose = false;
};

struct Decomposition {
  unsigned long p;
  Integer x, y, z;
  Integer a, b, c;  // z-y, z-x, x+y
  Integer phi_zy, phi_zx, phi_xy;
  VarValuations val_a, val_b, val_c;
  bool pth_a, pth_b, pth_c, pth_phi_zy, pth_phi_zx, pth_phi_xy;
  bool even_x, even_y, even_z;
  bool p_div_x, p_div_y, p_div_z;
  bool pairwise_coprime;
  Shape shape;
  ShapeComponents components;
};

/// Computes the full decomposition record of a candidate triple and
/// classifies its power shape. Raises DomainError unless 0 < x < y < z and
/// gcd(x, y, z) = 1.
Decomposition decompose(const OddPrime& p, const CandidateTriple& t);

struct GapRoot {
  Integer radicand;  // p * a * b * K_p(x, a, b)
  bool exact;        // radicand is a perfect p-th power
  Integer residual;  // x^p + y^p - z^p
};

GapRoot gap_root(const Decomposition& d);

/// Stable-field-order JSON rendering of a decomposition.
std::string decomposition_json(const Decomposition& d);

}  // namespace fermatlab
