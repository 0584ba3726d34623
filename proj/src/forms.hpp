/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "arith.hpp"

namespace fermatlab {

/// Homogeneous power-difference form: sum_{i=0}^{p-1} u^(p-1-i) v^i.
/// Total in u = v; equals (u^p - v^p)/(u - v) otherwise.
Integer phi(const OddPrime& p, const Integer& u, const Integer& v);

/// The A/D split of phi with k = (p-1)/2.
///
/// Plain forms:        phi(u, v)  = A + (uv)^k = D + p*(uv)^k
/// Alternating forms:  phi(u, -v) = A + (-1)^k (uv)^k = D + (uv)^k
struct FormPair {
  Integer A;
  Integer D;
  Integer phi;
  unsigned long k;
  bool alternating;
};

FormPair ad_forms(const OddPrime& p, const Integer& u, const Integer& v,
                  bool alternating);

/// gcd structure of (z - y, phi(z, y)) for coprime 0 < y < z. The gcd is
/// always 1 or p; it is p exactly when p | z - y, and then the p-adic
/// valuation of phi is exactly 1.
struct GcdClass {
  Integer g;
  unsigned long phi_valuation;
  bool divides;  // p | z - y
};

GcdClass classify_gcd(const OddPrime& p, const Integer& y, const Integer& z);

}  // namespace fermatlab
