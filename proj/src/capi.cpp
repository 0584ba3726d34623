/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "fermatlab/fermatlab.h"

#include <json.hpp>

#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "audit.hpp"
#include "barlow.hpp"
#include "dickson.hpp"
#include "forms.hpp"
#include "poly.hpp"
#include "search.hpp"

using namespace fermatlab;
using ordered_json = nlohmann::ordered_json;

struct fl_result {
  std::optional<std::string> table;
  std::optional<std::string> json;
  std::optional<std::string> csv;
  bool any_falsified = false;
};

namespace {

thread_local std::string g_last_error;

Integer parse_integer(const char* s, const char* what) {
  if (s == nullptr || *s == '\0')
    throw DomainError(std::string(what) + ": missing integer");
  Integer v;
  if (mpz_set_str(v.get_mpz_t(), s, 10) != 0)
    throw DomainError(std::string(what) + ": not a decimal integer: '" +
                      s + "'");
  return v;
}

OddPrime parse_odd_prime(const char* s) {
  return OddPrime(parse_integer(s, "p"));
}

fl_status fail(fl_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
fl_status guarded(fl_result** out, Fn&& fn) {
  if (out == nullptr) return fail(FL_EINVAL, "null result out-parameter");
  *out = nullptr;
  try {
    auto result = std::make_unique<fl_result>();
    fn(*result);
    *out = result.release();
    g_last_error.clear();
    return FL_OK;
  } catch (const UnknownClaimError& e) {
    return fail(FL_EUNKNOWN_CLAIM, e.what());
  } catch (const BudgetError& e) {
    return fail(FL_EBUDGET, e.what());
  } catch (const DomainError& e) {
    return fail(FL_EDOMAIN, e.what());
  } catch (const IntegrityError& e) {
    return fail(FL_EINTEGRITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FL_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(FL_EINTERNAL, e.what());
  }
}

std::vector<unsigned long> parse_p_set(const char* csv) {
  std::vector<unsigned long> out;
  std::string s(csv);
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    const OddPrime p(parse_integer(item.c_str(), "p_set entry"));
    out.push_back(p.value());
  }
  return out;
}

CheckBudget make_budget(const fl_audit_budget* b, uint64_t seed) {
  CheckBudget out;
  if (b != nullptr) {
    if (b->p_set != nullptr) out.p_set = parse_p_set(b->p_set);
    if (b->exhaustive_bound) out.exhaustive_bound = b->exhaustive_bound;
    if (b->sample_count) out.sample_count = b->sample_count;
    if (b->var_bits) out.var_bits = b->var_bits;
    if (b->max_checks) out.max_checks = b->max_checks;
  }
  out.seed = seed;
  return out;
}

}  // namespace

extern "C" {

FL_API fl_status fl_phi(const char* p, const char* u, const char* v,
                        fl_result** out) {
  return guarded(out, [&](fl_result& r) {
    const OddPrime prime = parse_odd_prime(p);
    const Integer uu = parse_integer(u, "u");
    const Integer vv = parse_integer(v, "v");
    const Integer value = phi(prime, uu, vv);
    r.table = value.get_str() + "\n";
    ordered_json j;
    j["p"] = prime.value();
    j["u"] = uu.get_str();
    j["v"] = vv.get_str();
    j["phi"] = value.get_str();
    r.json = j.dump(2);
  });
}

FL_API fl_status fl_forms(const char* p, const char* u, const char* v,
                          int alternating, fl_result** out) {
  return guarded(out, [&](fl_result& r) {
    const OddPrime prime = parse_odd_prime(p);
    const Integer uu = parse_integer(u, "u");
    const Integer vv = parse_integer(v, "v");
    const FormPair f = ad_forms(prime, uu, vv, alternating != 0);
    std::ostringstream table;
    table << "A   = " << f.A << "\n"
          << "D   = " << f.D << "\n"
          << "phi = " << f.phi << "\n"
          << "k   = " << f.k << (f.alternating ? "  (alternating)" : "")
          << "\n";
    r.table = table.str();
    ordered_json j;
    j["p"] = prime.value();
    j["u"] = uu.get_str();
    j["v"] = vv.get_str();
    j["alternating"] = f.alternating;
    j["A"] = f.A.get_str();
    j["D"] = f.D.get_str();
    j["phi"] = f.phi.get_str();
    j["k"] = f.k;
    r.json = j.dump(2);
  });
}

FL_API fl_status fl_kpoly(const char* p, const char* method, int mod_p,
                          fl_result** out) {
  return guarded(out, [&](fl_result& r) {
    const OddPrime prime = parse_odd_prime(p);
    std::string m = method == nullptr ? "division" : method;
    KMethod km;
    if (m == "division") {
      km = KMethod::Division;
    } else if (m == "explicit") {
      km = KMethod::Explicit;
    } else {
      throw DomainError("kpoly: method must be 'division' or 'explicit'");
    }
    ordered_json j;
    j["p"] = prime.value();
    if (mod_p) {
      const KModP reduced = k_mod_p(prime);
      r.table = reduced.reduced.to_string() + "\n" + reduced.h.to_string() +
                "\n";
      j["reduced"] = reduced.reduced.to_string();
      j["h"] = reduced.h.to_string();
    } else {
      const Polynomial k = k_poly(prime, km);
      r.table = k.to_string() + "\n";
      j["method"] = m;
      j["k"] = k.to_string();
    }
    r.json = j.dump(2);
  });
}

FL_API fl_status fl_dickson(const char* z_max, fl_result** out) {
  return guarded(out, [&](fl_result& r) {
    const Integer bound = parse_integer(z_max, "z_max");
    const auto triples = enumerate_primitive(bound);
    r.csv = triples_csv(triples);
    std::ostringstream table;
    for (const auto& t : triples)
      table << "(" << t.x << ", " << t.y << ", " << t.z << ")\n";
    table << triples.size() << " primitive triples with z <= " << bound
          << "\n";
    r.table = table.str();
    ordered_json arr = ordered_json::array();
    for (const auto& t : triples) {
      arr.push_back(ordered_json{{"x", t.x.get_str()},
                                 {"y", t.y.get_str()},
                                 {"z", t.z.get_str()},
                                 {"primitive", t.primitive}});
    }
    ordered_json j;
    j["z_max"] = bound.get_str();
    j["count"] = triples.size();
    j["triples"] = std::move(arr);
    r.json = j.dump(2);
  });
}

FL_API fl_status fl_decompose(const char* p, const char* x, const char* y,
                              const char* z, fl_result** out) {
  return guarded(out, [&](fl_result& r) {
    const OddPrime prime = parse_odd_prime(p);
    const CandidateTriple t{parse_integer(x, "x"), parse_integer(y, "y"),
                            parse_integer(z, "z")};
    const Decomposition d = decompose(prime, t);
    const GapRoot g = gap_root(d);
    r.json = decomposition_json(d);
    std::ostringstream table;
    table << "a = " << d.a << "  b = " << d.b << "  c = " << d.c << "\n"
          << "phi(z,y) = " << d.phi_zy << "  phi(z,x) = " << d.phi_zx
          << "  phi(x,-y) = " << d.phi_xy << "\n"
          << "shape = " << shape_name(d.shape) << "\n"
          << "p*a*b*K = " << g.radicand
          << (g.exact ? "  (perfect p-th power)" : "  (not a p-th power)")
          << "\n"
          << "residual x^p + y^p - z^p = " << g.residual << "\n";
    r.table = table.str();
  });
}

FL_API fl_status fl_audit(const char* claim_ids, const fl_audit_budget* budget,
                          uint64_t seed, int deterministic, unsigned workers,
                          fl_result** out) {
  return guarded(out, [&](fl_result& r) {
    const CheckBudget cb = make_budget(budget, seed);
    AuditReport report;
    if (claim_ids == nullptr || *claim_ids == '\0') {
      report = run_all(cb, workers);
    } else {
      std::vector<std::string> ids;
      std::istringstream is{std::string(claim_ids)};
      std::string item;
      while (std::getline(is, item, ','))
        if (!item.empty()) ids.push_back(item);
      report = run_selected(ids, cb, workers);
    }
    r.json = audit_report_json(report, deterministic != 0);
    r.table = audit_report_table(report);
    r.any_falsified = report.any_falsified();
  });
}

FL_API fl_status fl_search(const char* p, const char* bound, uint64_t top_k,
                           int coprime_only, unsigned workers,
                           fl_result** out) {
  return guarded(out, [&](fl_result& r) {
    SearchWindow w{parse_odd_prime(p), parse_integer(bound, "bound"),
                   coprime_only != 0, top_k == 0 ? 10 : top_k,
                   workers == 0 ? 1 : workers};
    const SearchReport report = near_miss_scan(w);
    r.json = search_report_json(report);
    r.csv = search_report_csv(report);
    r.table = search_report_table(report);
  });
}

FL_API fl_status fl_congruence_stats(const char* p, const char* bound,
                                     int coprime_only, fl_result** out) {
  return guarded(out, [&](fl_result& r) {
    SearchWindow w{parse_odd_prime(p), parse_integer(bound, "bound"),
                   coprime_only != 0};
    const CongruenceTally tally = congruence_stats(w);
    r.json = congruence_tally_json(tally);
    r.table = congruence_tally_table(tally);
  });
}

FL_API const char* fl_result_text(const fl_result* r, fl_format format) {
  if (r == nullptr) return nullptr;
  switch (format) {
    case FL_FORMAT_TABLE: return r->table ? r->table->c_str() : nullptr;
    case FL_FORMAT_JSON: return r->json ? r->json->c_str() : nullptr;
    case FL_FORMAT_CSV: return r->csv ? r->csv->c_str() : nullptr;
  }
  return nullptr;
}

FL_API int fl_result_any_falsified(const fl_result* r) {
  return r != nullptr && r->any_falsified ? 1 : 0;
}

FL_API void fl_result_free(fl_result* r) { delete r; }

FL_API const char* fl_last_error(void) { return g_last_error.c_str(); }

FL_API const char* fl_version(void) { return "fermatlab 1.0.0"; }

}  // extern "C"
