/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * C interface of the fermatlab shared library. All arbitrary-precision
 * integers cross this boundary as decimal strings. Every entry point returns
 * a status code and, on success, an opaque result handle owning the rendered
 * output in one or more formats.
 */
#ifndef FERMATLAB_H
#define FERMATLAB_H

#include <stdint.h>

#if defined(_WIN32)
#define FL_API __declspec(dllexport)
#else
#define FL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fl_status {
  FL_OK = 0,
  FL_EINVAL = 1,         /* malformed argument (unparseable number, bad flag) */
  FL_EDOMAIN = 2,        /* violated mathematical precondition */
  FL_EINTEGRITY = 3,     /* internal consistency failure */
  FL_EUNKNOWN_CLAIM = 4, /* claim id not in the registry */
  FL_EBUDGET = 5,        /* refused: work exceeds the configured budget */
  FL_EINTERNAL = 6       /* unexpected failure */
} fl_status;

typedef enum fl_format {
  FL_FORMAT_TABLE = 0,
  FL_FORMAT_JSON = 1,
  FL_FORMAT_CSV = 2
} fl_format;

typedef struct fl_result fl_result;

typedef struct fl_audit_budget {
  /* comma-separated odd primes, e.g. "3,5,7,11,13"; NULL for the default;
   * "" for the empty set (every claim becomes VACUOUS) */
  const char* p_set;
  uint64_t exhaustive_bound; /* 0 -> 300 */
  uint64_t sample_count;     /* 0 -> 10000 */
  uint32_t var_bits;         /* 0 -> 256 */
  uint64_t max_checks;       /* 0 -> 20000000 */
} fl_audit_budget;

/* phi / A / D forms evaluated at integers u, v (decimal strings). */
FL_API fl_status fl_phi(const char* p, const char* u, const char* v,
                        fl_result** out);
FL_API fl_status fl_forms(const char* p, const char* u, const char* v,
                          int alternating, fl_result** out);

/* The quotient polynomial of the gap by p*a*b. method: "division" or
 * "explicit". When mod_p is nonzero, renders the x->a reduction mod p and
 * its residual h instead. */
FL_API fl_status fl_kpoly(const char* p, const char* method, int mod_p,
                          fl_result** out);

/* All primitive right triples with hypotenuse <= z_max (z_max >= 5). */
FL_API fl_status fl_dickson(const char* z_max, fl_result** out);

/* Full decomposition record of a candidate triple 0 < x < y < z. */
FL_API fl_status fl_decompose(const char* p, const char* x, const char* y,
                              const char* z, fl_result** out);

/* Runs the claim registry. claim_ids: comma-separated subset or NULL for
 * all. budget: NULL for defaults. seed feeds the sampled domains. When
 * deterministic is nonzero the report carries no wall-clock metadata. */
FL_API fl_status fl_audit(const char* claim_ids, const fl_audit_budget* budget,
                          uint64_t seed, int deterministic, unsigned workers,
                          fl_result** out);

/* Exhaustive near-miss scan for x^p + y^p = z^p with x < y < z <= bound. */
FL_API fl_status fl_search(const char* p, const char* bound, uint64_t top_k,
                           int coprime_only, unsigned workers,
                           fl_result** out);

/* Congruence tallies over the same window. */
FL_API fl_status fl_congruence_stats(const char* p, const char* bound,
                                     int coprime_only, fl_result** out);

/* Rendered text for a format, or NULL when the format does not apply to
 * this result. The pointer stays valid until fl_result_free. */
FL_API const char* fl_result_text(const fl_result* r, fl_format format);

/* 1 when the result is an audit report containing a FALSIFIED verdict. */
FL_API int fl_result_any_falsified(const fl_result* r);

FL_API void fl_result_free(fl_result* r);

/* Thread-local message describing the last failing call. */
FL_API const char* fl_last_error(void);

FL_API const char* fl_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FERMATLAB_H */
