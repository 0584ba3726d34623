/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "barlow.hpp"

#include <json.hpp>

#include "forms.hpp"
#include "poly.hpp"

namespace fermatlab {

namespace {

using ordered_json = nlohmann::ordered_json;

VarValuations valuations_of(const Integer& n, unsigned long p) {
  return {p_adic_valuation(n, Integer(2)), p_adic_valuation(n, Integer(p))};
}

nlohmann::ordered_json opt_int(const std::optional<Integer>& v) {
  if (!v) return nullptr;
  return v->get_str();
}

nlohmann::ordered_json opt_ul(const std::optional<unsigned long>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::None: return "NONE";
    case Shape::Flt1: return "FLT1";
    case Shape::Flt2CaseI: return "FLT2_CASE_I";
    case Shape::Flt2CaseII: return "FLT2_CASE_II";
  }
  return "NONE";
}

bool perfect_pth_power(const Integer& n, unsigned long p) {
  if (n <= 0) throw DomainError("perfect_pth_power: require n > 0");
  return integer_root(n, p).exact;
}

bool perfect_pth_power_signed(const Integer& n, unsigned long p) {
  if (n == 0) return true;
  if (n < 0) {
    if (p % 2 == 0) return false;
    return integer_root(-n, p).exact;
  }
  return integer_root(n, p).exact;
}

CaseIForm case_i_form(const Integer& n, unsigned long p) {
  CaseIForm out;
  const unsigned long nu2 = p_adic_valuation(n, Integer(2));
  const unsigned long nup = p_adic_valuation(n, Integer(p));
  if (nu2 == 0 || nu2 % p != 0) return out;
  if ((nup + 1) % p != 0) return out;
  Integer cof = n >> nu2;
  for (unsigned long i = 0; i < nup; ++i) cof /= static_cast<long>(p);
  RootResult root = integer_root(cof, p);
  if (!root.exact) return out;
  out.admits = true;
  out.d = nu2 / p;
  out.e = (nup + 1) / p;
  out.cofactor_root = root.root;
  return out;
}

CaseIIAForm case_ii_a_form(const Integer& n, unsigned long p) {
  CaseIIAForm out;
  const unsigned long nu2 = p_adic_valuation(n, Integer(2));
  const unsigned long nup = p_adic_valuation(n, Integer(p));
  if (nu2 == 0 || nu2 % p != 0 || nup != 0) return out;
  RootResult root = integer_root(n >> nu2, p);
  if (!root.exact) return out;
  out.admits = true;
  out.d = nu2 / p;
  out.cofactor_root = root.root;
  return out;
}

CaseIIBForm case_ii_b_form(const Integer& n, unsigned long p) {
  CaseIIBForm out;
  const unsigned long nup = p_adic_valuation(n, Integer(p));
  if ((nup + 1) % p != 0) return out;
  out.e = (nup + 1) / p;
  Integer cof = n;
  for (unsigned long i = 0; i < nup; ++i) cof /= static_cast<long>(p);
  RootResult root = integer_root(cof, p);
  if (!root.exact) return out;
  out.cofactor_root = root.root;
  out.admits_loose = true;
  out.admits_strict = mpz_odd_p(root.root.get_mpz_t()) != 0;
  return out;
}

Decomposition decompose(const OddPrime& p, const CandidateTriple& t) {
  if (!(t.x > 0 && t.x < t.y && t.y < t.z))
    throw DomainError("decompose: require 0 < x < y < z");
  if (gcd(gcd(t.x, t.y), t.z) != 1)
    throw DomainError("decompose: require gcd(x, y, z) = 1");

  Decomposition d;
  d.p = p.value();
  d.x = t.x;
  d.y = t.y;
  d.z = t.z;
  d.a = t.z - t.y;
  d.b = t.z - t.x;
  d.c = t.x + t.y;
  d.phi_zy = phi(p, t.z, t.y);
  d.phi_zx = phi(p, t.z, t.x);
  d.phi_xy = phi(p, t.x, -t.y);
  d.val_a = valuations_of(d.a, d.p);
  d.val_b = valuations_of(d.b, d.p);
  d.val_c = valuations_of(d.c, d.p);
  d.pth_a = perfect_pth_power(d.a, d.p);
  d.pth_b = perfect_pth_power(d.b, d.p);
  d.pth_c = perfect_pth_power(d.c, d.p);
  d.pth_phi_zy = perfect_pth_power(d.phi_zy, d.p);
  d.pth_phi_zx = perfect_pth_power(d.phi_zx, d.p);
  d.pth_phi_xy = perfect_pth_power(d.phi_xy, d.p);
  d.even_x = mpz_even_p(t.x.get_mpz_t()) != 0;
  d.even_y = mpz_even_p(t.y.get_mpz_t()) != 0;
  d.even_z = mpz_even_p(t.z.get_mpz_t()) != 0;
  d.p_div_x = mpz_divisible_ui_p(t.x.get_mpz_t(), d.p) != 0;
  d.p_div_y = mpz_divisible_ui_p(t.y.get_mpz_t(), d.p) != 0;
  d.p_div_z = mpz_divisible_ui_p(t.z.get_mpz_t(), d.p) != 0;
  d.pairwise_coprime =
      gcd(t.x, t.y) == 1 && gcd(t.x, t.z) == 1 && gcd(t.y, t.z) == 1;

  ShapeComponents& comp = d.components;
  if (d.pth_a) comp.r = integer_root(d.a, d.p).root;
  if (d.pth_b) comp.s = integer_root(d.b, d.p).root;
  if (d.pth_c) comp.t = integer_root(d.c, d.p).root;
  if (d.pth_phi_zy) comp.r1 = integer_root(d.phi_zy, d.p).root;
  if (d.pth_phi_zx) comp.s1 = integer_root(d.phi_zx, d.p).root;
  if (d.pth_phi_xy) comp.t1 = integer_root(d.phi_xy, d.p).root;

  const CaseIForm ci = case_i_form(d.a, d.p);
  if (ci.admits) {
    comp.case_i_d = ci.d;
    comp.case_i_e = ci.e;
    comp.case_i_r_prime = ci.cofactor_root;
    // The stripped cofactor root is coprime to 2p by construction, so the
    // two readings of the side condition coincide here.
    comp.case_i_root_coprime_to_2_and_p = true;
    comp.case_i_root_not_divisible_by_2p = true;
  }
  const CaseIIAForm ca = case_ii_a_form(d.a, d.p);
  const CaseIIBForm cb = case_ii_b_form(d.b, d.p);
  if (ca.admits) {
    comp.case_ii_d = ca.d;
    comp.case_ii_r0 = ca.cofactor_root;
  }
  if (cb.admits_loose) {
    comp.case_ii_e = cb.e;
    comp.case_ii_s_prime = cb.cofactor_root;
  }
  comp.case_ii_admits_strict = ca.admits && cb.admits_strict;
  comp.case_ii_admits_loose = ca.admits && cb.admits_loose;

  // phi(z, y) = p * (p-th power) requires valuation exactly 1.
  const bool phi_zy_case_i =
      d.val_a.nup > 0
          ? (p_adic_valuation(d.phi_zy, p.as_integer()) == 1 &&
             perfect_pth_power(d.phi_zy / p.as_integer(), d.p))
          : false;
  const bool phi_zx_case_ii =
      d.val_b.nup > 0
          ? (p_adic_valuation(d.phi_zx, p.as_integer()) == 1 &&
             perfect_pth_power(d.phi_zx / p.as_integer(), d.p))
          : false;

  if (d.pth_a && d.pth_b && d.pth_c && d.pth_phi_zy && d.pth_phi_zx &&
      d.pth_phi_xy) {
    d.shape = Shape::Flt1;
  } else if (ci.admits && d.pth_b && d.pth_c && phi_zy_case_i) {
    d.shape = Shape::Flt2CaseI;
  } else if (comp.case_ii_admits_strict && d.pth_c && phi_zx_case_ii) {
    d.shape = Shape::Flt2CaseII;
  } else {
    d.shape = Shape::None;
  }
  return d;
}

GapRoot gap_root(const Decomposition& d) {
  const OddPrime p(d.p);
  const Polynomial k = k_poly(p, KMethod::Division);
  const Integer kval = k.evaluate_integer(
      {{Var::X, d.x}, {Var::A, d.a}, {Var::B, d.b}});
  GapRoot out;
  out.radicand = p.as_integer() * d.a * d.b * kval;
  out.exact = perfect_pth_power_signed(out.radicand, d.p);
  out.residual = integer_pow(d.x, d.p) + integer_pow(d.y, d.p) -
                 integer_pow(d.z, d.p);
  return out;
}

std::string decomposition_json(const Decomposition& d) {
  ordered_json j;
  j["p"] = d.p;
  j["x"] = d.x.get_str();
  j["y"] = d.y.get_str();
  j["z"] = d.z.get_str();
  j["a"] = d.a.get_str();
  j["b"] = d.b.get_str();
  j["c"] = d.c.get_str();
  j["phi_zy"] = d.phi_zy.get_str();
  j["phi_zx"] = d.phi_zx.get_str();
  j["phi_xy"] = d.phi_xy.get_str();
  j["valuations"] = ordered_json{
      {"a", {{"nu2", d.val_a.nu2}, {"nup", d.val_a.nup}}},
      {"b", {{"nu2", d.val_b.nu2}, {"nup", d.val_b.nup}}},
      {"c", {{"nu2", d.val_c.nu2}, {"nup", d.val_c.nup}}},
  };
  j["pth_power"] = ordered_json{
      {"a", d.pth_a},           {"b", d.pth_b},
      {"c", d.pth_c},           {"phi_zy", d.pth_phi_zy},
      {"phi_zx", d.pth_phi_zx}, {"phi_xy", d.pth_phi_xy},
  };
  j["even"] = ordered_json{
      {"x", d.even_x}, {"y", d.even_y}, {"z", d.even_z}};
  j["p_divides"] = ordered_json{
      {"x", d.p_div_x}, {"y", d.p_div_y}, {"z", d.p_div_z}};
  j["pairwise_coprime"] = d.pairwise_coprime;
  j["shape"] = shape_name(d.shape);
  const ShapeComponents& c = d.components;
  ordered_json comp;
  comp["r"] = opt_int(c.r);
  comp["s"] = opt_int(c.s);
  comp["t"] = opt_int(c.t);
  comp["r1"] = opt_int(c.r1);
  comp["s1"] = opt_int(c.s1);
  comp["t1"] = opt_int(c.t1);
  comp["case_i"] = ordered_json{
      {"d", opt_ul(c.case_i_d)},
      {"e", opt_ul(c.case_i_e)},
      {"r_prime", opt_int(c.case_i_r_prime)},
      {"root_coprime_to_2_and_p", c.case_i_root_coprime_to_2_and_p},
      {"root_not_divisible_by_2p", c.case_i_root_not_divisible_by_2p},
  };
  comp["case_ii"] = ordered_json{
      {"d", opt_ul(c.case_ii_d)},
      {"e", opt_ul(c.case_ii_e)},
      {"r0", opt_int(c.case_ii_r0)},
      {"s_prime", opt_int(c.case_ii_s_prime)},
      {"admits_strict", c.case_ii_admits_strict},
      {"admits_loose", c.case_ii_admits_loose},
  };
  j["components"] = std::move(comp);
  return j.dump(2);
}

}  // namespace fermatlab
