/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "forms.hpp"

#include <vector>

namespace fermatlab {

Integer phi(const OddPrime& p, const Integer& u, const Integer& v) {
  // Horner over u: sum_{j=0}^{p-1} u^j v^(p-1-j).
  const unsigned long n = p.value();
  std::vector<Integer> v_pow(n);
  v_pow[0] = 1;
  for (unsigned long i = 1; i < n; ++i) v_pow[i] = v_pow[i - 1] * v;
  Integer acc(0);
  for (unsigned long j = n; j-- > 0;) acc = acc * u + v_pow[n - 1 - j];
  return acc;
}

FormPair ad_forms(const OddPrime& p, const Integer& u, const Integer& v,
                  bool alternating) {
  const unsigned long k = p.half();
  const Integer uv = u * v;
  std::vector<Integer> u_pow(k + 1), v_pow(k + 1);
  u_pow[0] = v_pow[0] = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    u_pow[i] = u_pow[i - 1] * u;
    v_pow[i] = v_pow[i - 1] * v;
  }
  FormPair out;
  out.k = k;
  out.alternating = alternating;
  out.A = 0;
  out.D = 0;
  Integer uv_pow(1);  // (uv)^i
  for (unsigned long i = 0; i < k; ++i) {
    const Integer& uk = u_pow[k - i];
    const Integer& vk = v_pow[k - i];
    Integer a_term = uv_pow * (uk * uk + vk * vk);
    Integer d_term = uv_pow * (uk - vk) * (uk - vk);
    if (alternating && (i % 2 == 1)) {
      out.A -= a_term;
      out.D -= d_term;
    } else {
      out.A += a_term;
      out.D += d_term;
    }
    uv_pow *= uv;
  }
  out.phi = alternating ? phi(p, u, -v) : phi(p, u, v);
  return out;
}

GcdClass classify_gcd(const OddPrime& p, const Integer& y, const Integer& z) {
  if (!(y > 0 && y < z))
    throw DomainError("classify_gcd: require 0 < y < z");
  if (gcd(y, z) != 1)
    throw DomainError("classify_gcd: y and z must be coprime");
  const Integer diff = z - y;
  const Integer f = phi(p, z, y);
  GcdClass out;
  out.g = gcd(diff, f);
  out.phi_valuation = p_adic_valuation(f, p.as_integer());
  out.divides = mpz_divisible_ui_p(diff.get_mpz_t(), p.value()) != 0;
  return out;
}

}  // namespace fermatlab
