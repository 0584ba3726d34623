/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"

namespace fermatlab {

/// A pair (a, b) of positive integers; generates a right triple exactly when
/// 2ab is a perfect square.
struct DicksonPair {
  Integer a;
  Integer b;
};

struct PythTriple {
  Integer x;
  Integer y;
  Integer z;
  bool primitive;
};

/// (a + m, b + m, a + b + m) with m = sqrt(2ab) when 2ab is a perfect
/// square; absent otherwise. x < y iff a < b.
std::optional<PythTriple> triple_from_pair(const DicksonPair& pair);

/// All primitive right triples with hypotenuse <= z_max, normalized x < y,
/// sorted by (z, x). Generated by scanning pairs with a < b in increasing
/// a + b, then a. Requires z_max >= 5.
std::vector<PythTriple> enumerate_primitive(const Integer& z_max);

/// Structure of the difference pair of a primitive triple whose even leg is
/// given first: a = z - y = 2^(2e-1) * r'^2 and b = z - x = s^2 with r', s
/// odd, and x - a = 2^e * r' * s.
struct EvenLegDecomposition {
  Integer a;
  Integer b;
  unsigned long e;
  Integer r_prime;
  Integer s;
};

EvenLegDecomposition p2_decompose(const Integer& x_even, const Integer& y,
                                  const Integer& z);

/// CSV with header x,y,z,a,b,m,primitive.
std::string triples_csv(const std::vector<PythTriple>& triples);

}  // namespace fermatlab
