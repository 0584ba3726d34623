/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "dickson.hpp"

#include <algorithm>
#include <sstream>

namespace fermatlab {

std::optional<PythTriple> triple_from_pair(const DicksonPair& pair) {
  if (pair.a < 1 || pair.b < 1)
    throw DomainError("triple_from_pair: require a, b >= 1");
  const Integer twice = 2 * pair.a * pair.b;
  RootResult m = integer_root(twice, 2);
  if (!m.exact) return std::nullopt;
  PythTriple t;
  t.x = pair.a + m.root;
  t.y = pair.b + m.root;
  t.z = pair.a + pair.b + m.root;
  t.primitive = gcd(gcd(t.x, t.y), t.z) == 1;
  return t;
}

std::vector<PythTriple> enumerate_primitive(const Integer& z_max) {
  if (z_max < 5) throw DomainError("enumerate_primitive: require z_max >= 5");
  std::vector<PythTriple> out;
  // a < b and z = a + b + sqrt(2ab) <= z_max force a + b < z_max.
  for (Integer s = 3; s < z_max; ++s) {
    for (Integer a = 1; 2 * a < s; ++a) {
      auto t = triple_from_pair({a, s - a});
      if (!t || !t->primitive || t->z > z_max) continue;
      out.push_back(*t);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PythTriple& s, const PythTriple& t) {
              if (s.z != t.z) return s.z < t.z;
              return s.x < t.x;
            });
  return out;
}

EvenLegDecomposition p2_decompose(const Integer& x_even, const Integer& y,
                                  const Integer& z) {
  if (x_even < 1 || y < 1 || z < 1)
    throw DomainError("p2_decompose: require positive inputs");
  if (mpz_odd_p(x_even.get_mpz_t()))
    throw DomainError("p2_decompose: first leg must be even");
  if (x_even * x_even + y * y != z * z)
    throw DomainError("p2_decompose: not a right triple");
  if (gcd(gcd(x_even, y), z) != 1)
    throw DomainError("p2_decompose: triple must be primitive");

  EvenLegDecomposition d;
  d.a = z - y;
  d.b = z - x_even;
  const unsigned long nu2 = p_adic_valuation(d.a, Integer(2));
  if (nu2 % 2 == 0)
    throw IntegrityError("p2_decompose: even-leg difference has even 2-adic "
                         "valuation");
  d.e = (nu2 + 1) / 2;
  RootResult r = integer_root(d.a >> nu2, 2);
  RootResult s = integer_root(d.b, 2);
  if (!r.exact || !s.exact)
    throw IntegrityError("p2_decompose: difference pair is not of the "
                         "expected square shape");
  d.r_prime = r.root;
  d.s = s.root;
  const Integer expected = (Integer(1) << d.e) * d.r_prime * d.s;
  if (x_even - d.a != expected)
    throw IntegrityError("p2_decompose: x - a mismatch");
  return d;
}

std::string triples_csv(const std::vector<PythTriple>& triples) {
  std::ostringstream os;
  os << "x,y,z,a,b,m,primitive\n";
  for (const auto& t : triples) {
    const Integer a = t.z - t.y;
    const Integer b = t.z - t.x;
    const Integer m = t.x + t.y - t.z;
    os << t.x << ',' << t.y << ',' << t.z << ',' << a << ',' << b << ',' << m
       << ',' << (t.primitive ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace fermatlab
