/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace fermatlab {

namespace {

constexpr std::array<const char*, kNumVars> kVarNames = {"x", "y", "z", "a",
                                                         "b", "c", "R"};

struct GrlexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const {
    return grlex_less(rhs, lhs);
  }
};

bool exp_divides(const Exponents& den, const Exponents& num) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (den[i] > num[i]) return false;
  return true;
}

Exponents exp_sub(const Exponents& lhs, const Exponents& rhs) {
  Exponents out{};
  for (std::size_t i = 0; i < kNumVars; ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

Exponents exp_add(const Exponents& lhs, const Exponents& rhs) {
  Exponents out{};
  for (std::size_t i = 0; i < kNumVars; ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

unsigned long total_degree(const Exponents& e) {
  unsigned long d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grlex_less(const Exponents& lhs, const Exponents& rhs) {
  const unsigned long dl = total_degree(lhs);
  const unsigned long dr = total_degree(rhs);
  if (dl != dr) return dl < dr;
  // x ranks highest: compare from index 0.
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (lhs[i] != rhs[i]) return lhs[i] < rhs[i];
  return false;
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial q;
  if (c != 0) q.terms_.push_back({std::move(c), kNoVars});
  return q;
}

Polynomial Polynomial::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(Rational(1), e);
}

Polynomial Polynomial::monomial(Rational coeff, const Exponents& exp) {
  Polynomial q;
  if (coeff != 0) q.terms_.push_back({std::move(coeff), exp});
  return q;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) {
    return grlex_less(t.exp, s.exp);  // descending
  });
  Polynomial q;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!q.terms_.empty() && q.terms_.back().exp == t.exp) {
      q.terms_.back().coeff += t.coeff;
      if (q.terms_.back().coeff == 0) q.terms_.pop_back();
    } else {
      q.terms_.push_back(std::move(t));
    }
  }
  return q;
}

unsigned long Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.front().exp);
}

std::optional<unsigned long> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned long d = total_degree(terms_.front().exp);
  for (const auto& t : terms_)
    if (total_degree(t.exp) != d) return std::nullopt;
  return d;
}

bool Polynomial::is_integral() const {
  for (const auto& t : terms_)
    if (t.coeff.get_den() != 1) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial q(*this);
  for (auto& t : q.terms_) t.coeff = -t.coeff;
  return q;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  // Merge of two canonically sorted term lists.
  Polynomial q;
  q.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    const Exponents& le = terms_[i].exp;
    const Exponents& re = rhs.terms_[j].exp;
    if (le == re) {
      Rational c = terms_[i].coeff + rhs.terms_[j].coeff;
      if (c != 0) q.terms_.push_back({std::move(c), le});
      ++i, ++j;
    } else if (grlex_less(re, le)) {
      q.terms_.push_back(terms_[i++]);
    } else {
      q.terms_.push_back(rhs.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) q.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) q.terms_.push_back(rhs.terms_[j]);
  return q;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  std::map<Exponents, Rational, GrlexGreater> acc;
  for (const auto& s : terms_) {
    for (const auto& t : rhs.terms_) {
      Exponents e = exp_add(s.exp, t.exp);
      auto [it, inserted] = acc.try_emplace(e, s.coeff * t.coeff);
      if (!inserted) it->second += s.coeff * t.coeff;
    }
  }
  Polynomial q;
  q.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) q.terms_.push_back({std::move(c), e});
  return q;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != rhs.terms_[i].exp ||
        terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& r) const {
  const std::size_t vi = static_cast<std::size_t>(v);
  unsigned long max_e = 0;
  for (const auto& t : terms_) max_e = std::max<unsigned long>(max_e, t.exp[vi]);
  std::vector<Polynomial> r_pow(max_e + 1);
  r_pow[0] = constant(1);
  for (unsigned long e = 1; e <= max_e; ++e) r_pow[e] = r_pow[e - 1] * r;

  Polynomial out;
  for (const auto& t : terms_) {
    Exponents rest = t.exp;
    const unsigned long e = rest[vi];
    rest[vi] = 0;
    out = out + monomial(t.coeff, rest) * r_pow[e];
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<Var, Integer>& point) const {
  // Power cache per variable.
  std::array<std::vector<Integer>, kNumVars> powers;
  std::array<bool, kNumVars> bound{};
  for (std::size_t i = 0; i < kNumVars; ++i) {
    auto it = point.find(static_cast<Var>(i));
    if (it == point.end()) continue;
    bound[i] = true;
    unsigned long max_e = 0;
    for (const auto& t : terms_) max_e = std::max<unsigned long>(max_e, t.exp[i]);
    powers[i].resize(max_e + 1);
    powers[i][0] = 1;
    for (unsigned long e = 1; e <= max_e; ++e)
      powers[i][e] = powers[i][e - 1] * it->second;
  }
  Rational sum(0);
  for (const auto& t : terms_) {
    Integer prod(1);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exp[i] == 0) continue;
      if (!bound[i])
        throw DomainError(std::string("evaluate: unbound variable ") +
                          kVarNames[i]);
      prod *= powers[i][t.exp[i]];
    }
    sum += t.coeff * Rational(prod);
  }
  return sum;
}

Integer Polynomial::evaluate_integer(const std::map<Var, Integer>& point) const {
  Rational r = evaluate(point);
  if (r.get_den() != 1)
    throw IntegrityError("evaluate_integer: value is not an integer");
  return r.get_num();
}

Polynomial::Content Polynomial::content() const {
  Content c;
  c.coefficient_gcd = 0;
  c.monomial_gcd = kNoVars;
  if (terms_.empty()) return c;
  Integer num_gcd(0), den_lcm(1);
  c.monomial_gcd = terms_.front().exp;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.get_den().get_mpz_t());
    for (std::size_t i = 0; i < kNumVars; ++i)
      c.monomial_gcd[i] = std::min(c.monomial_gcd[i], t.exp[i]);
  }
  c.coefficient_gcd = Rational(abs(num_gcd), den_lcm);
  c.coefficient_gcd.canonicalize();
  return c;
}

Polynomial Polynomial::coefficients_mod(unsigned long p) const {
  const Integer pz(p);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Integer den_mod = t.coeff.get_den() % pz;
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw DomainError("coefficients_mod: denominator not a unit mod p");
    Integer num_mod;
    mpz_mod(num_mod.get_mpz_t(), t.coeff.get_num().get_mpz_t(), pz.get_mpz_t());
    Integer r = (num_mod * inv) % pz;
    if (r != 0) out.push_back({Rational(r), t.exp});
  }
  return from_terms(std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    std::string vars;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exp[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += kVarNames[i];
      if (t.exp[i] > 1) vars += "^" + std::to_string(t.exp[i]);
    }
    if (vars.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << vars;
    } else {
      os << mag.get_str() << "*" << vars;
    }
  }
  return os.str();
}

namespace {

// One term of the canonical text: [coeff]['*' var['^' e]]...
Term parse_term(std::string_view s) {
  if (s.empty()) throw DomainError("parse: empty term");
  Term t{Rational(1), kNoVars};
  bool have_coeff = false;
  std::size_t pos = 0;
  bool first_chunk = true;
  while (pos < s.size()) {
    std::size_t next = s.find('*', pos);
    std::string_view chunk = s.substr(
        pos, next == std::string_view::npos ? std::string_view::npos
                                            : next - pos);
    if (chunk.empty()) throw DomainError("parse: empty factor");
    if (std::isdigit(static_cast<unsigned char>(chunk[0]))) {
      if (!first_chunk || have_coeff)
        throw DomainError("parse: misplaced coefficient");
      t.coeff = Rational(std::string(chunk));
      t.coeff.canonicalize();
      have_coeff = true;
    } else {
      std::size_t caret = chunk.find('^');
      std::string_view name =
          caret == std::string_view::npos ? chunk : chunk.substr(0, caret);
      auto v = var_from_name(name);
      if (!v) throw DomainError("parse: unknown variable '" +
                                std::string(name) + "'");
      unsigned long e = 1;
      if (caret != std::string_view::npos) {
        std::string digits(chunk.substr(caret + 1));
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
          throw DomainError("parse: bad exponent");
        e = std::stoul(digits);
      }
      t.exp[static_cast<std::size_t>(*v)] += e;
    }
    first_chunk = false;
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return t;
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw DomainError("parse: empty input");

  std::vector<Term> terms;
  std::size_t pos = 0;
  int sign = 1;
  if (compact[0] == '-') {
    sign = -1;
    pos = 1;
  } else if (compact[0] == '+') {
    pos = 1;
  }
  while (pos < compact.size()) {
    std::size_t end = compact.find_first_of("+-", pos);
    if (end == pos) throw DomainError("parse: empty term");
    std::string_view body(compact.data() + pos,
                          (end == std::string::npos ? compact.size() : end) -
                              pos);
    Term t = parse_term(body);
    if (sign < 0) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    if (end == std::string::npos) break;
    sign = compact[end] == '-' ? -1 : 1;
    pos = end + 1;
  }
  return from_terms(std::move(terms));
}

ExactDivision exact_divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("exact_divide: division by zero");
  Polynomial rem = num;
  std::vector<Term> quotient;
  const Term& dlead = den.terms().front();
  while (!rem.is_zero()) {
    const Term& rlead = rem.terms().front();
    if (!exp_divides(dlead.exp, rlead.exp))
      return {std::nullopt, rem};
    Term q{rlead.coeff / dlead.coeff, exp_sub(rlead.exp, dlead.exp)};
    rem = rem - Polynomial::monomial(q.coeff, q.exp) * den;
    quotient.push_back(std::move(q));
  }
  return {Polynomial::from_terms(std::move(quotient)), Polynomial{}};
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
  ExactDivision d = exact_divide(num, den);
  if (!d.quotient)
    throw DomainError("exact_quotient: not divisible, remainder " +
                      d.remainder.to_string());
  return *d.quotient;
}

Polynomial var_pow(Var v, unsigned long e) {
  Exponents exp{};
  exp[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(e);
  return Polynomial::monomial(Rational(1), exp);
}

GapSplit build_fg(const OddPrime& p) {
  const unsigned long n = p.value();
  const Polynomial x = Polynomial::variable(Var::X);
  const Polynomial a = Polynomial::variable(Var::A);
  const Polynomial b = Polynomial::variable(Var::B);
  const Polynomial x_minus_a = x - a;
  const Polynomial minus_a = -a;

  GapSplit out;
  for (unsigned long i = 1; i <= n - 1; ++i) {
    const Polynomial bracket =
        x_minus_a.pow(n - i) - x.pow(n - i) - minus_a.pow(n - i);
    out.f = out.f - Polynomial::constant(binomial(n, i)) * var_pow(Var::B, i) *
                        bracket;
    out.g_sum = out.g_sum - Polynomial::constant(binomial(n, i)) *
                                var_pow(Var::B, n - i) * var_pow(Var::A, i);
  }
  out.g_closed = -(b - a).pow(n) + b.pow(n) + minus_a.pow(n);
  return out;
}

Polynomial fermat_gap(unsigned long p) {
  if (p < 2 || !is_prime(Integer(p)))
    throw DomainError("fermat_gap: p must be 2 or an odd prime");
  const Polynomial x = Polynomial::variable(Var::X);
  const Polynomial a = Polynomial::variable(Var::A);
  const Polynomial b = Polynomial::variable(Var::B);
  const Polynomial y = x + b - a;  // y expressed in the {x, a, b} frame
  const Polynomial z = x + b;
  return (x - a).pow(p) - (x.pow(p) + y.pow(p) - z.pow(p));
}

namespace {

Polynomial k_poly_explicit(const OddPrime& p) {
  const unsigned long n = p.value();
  Polynomial k;
  for (unsigned long i = 1; i <= n - 1; ++i) {
    Polynomial inner;
    for (unsigned long j = 1; j + i <= n - 1; ++j) {  // empty when i = n-1
      Rational c(binomial(n - i, j));
      if (j % 2 == 1) c = -c;
      inner = inner + Polynomial::constant(c) * var_pow(Var::X, n - i - j) *
                          var_pow(Var::A, j - 1);
    }
    Rational outer(binomial(n - 1, i - 1));
    outer /= static_cast<long>(i);
    k = k - Polynomial::constant(outer) * var_pow(Var::B, i - 1) * inner;

    Rational tail(binomial(n - 1, i - 1));
    tail /= static_cast<long>(i);
    if (i % 2 == 1) tail = -tail;
    k = k - Polynomial::constant(tail) * var_pow(Var::B, n - i - 1) *
                var_pow(Var::A, i - 1);
  }
  if (!k.is_integral())
    throw IntegrityError(
        "k_poly: explicit expansion produced non-integer coefficients");
  return k;
}

}  // namespace

Polynomial k_poly(const OddPrime& p, KMethod method) {
  if (method == KMethod::Explicit) return k_poly_explicit(p);
  static std::mutex mu;
  static std::map<unsigned long, Polynomial> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(p.value());
  if (it != cache.end()) return it->second;
  const Polynomial pab = Polynomial::constant(static_cast<long>(p.value())) *
                         var_pow(Var::A, 1) * var_pow(Var::B, 1);
  ExactDivision d = exact_divide(fermat_gap(p.value()), pab);
  if (!d.quotient)
    throw IntegrityError("k_poly: gap polynomial not divisible by p*a*b");
  return cache.emplace(p.value(), std::move(*d.quotient)).first->second;
}

KModP k_mod_p(const OddPrime& p) {
  const Polynomial reduced = k_poly(p, KMethod::Division)
                                 .substitute(Var::X, Polynomial::variable(Var::A))
                                 .coefficients_mod(p.value());
  const Polynomial h =
      (reduced - var_pow(Var::A, p.value() - 2) - var_pow(Var::B, p.value() - 2))
          .coefficients_mod(p.value());
  return {reduced, h};
}

}  // namespace fermatlab
