/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"

namespace fermatlab {

struct SearchWindow {
  OddPrime p;
  Integer bound;             // max z, >= 3
  bool coprime_only = true;  // keep only gcd(x, y, z) = 1
  std::uint64_t top_k = 10;  // >= 1
  unsigned workers = 1;
  bool use_prefilter = true;
  // Scans whose candidate count exceeds this are refused.
  std::uint64_t max_candidates = 100'000'000;
};

struct NearMiss {
  std::uint64_t x, y, z;
  Integer gap;      // x^p + y^p - z^p, never zero
  Integer abs_gap;
};

struct ExactHit {
  std::uint64_t x, y, z;
};

struct SearchStats {
  std::uint64_t window_triples = 0;  // closed-form C(bound, 3)
  std::uint64_t scanned = 0;
  std::uint64_t kept = 0;            // survived the coprime filter
  std::uint64_t prefilter_rejected = 0;
  std::uint64_t exact_checked = 0;
  std::uint64_t prefilter_modulus_prime_count = 0;
  std::uint64_t prefilter_modulus = 0;  // product of filter primes
};

struct SearchReport {
  unsigned long p;
  std::uint64_t bound;
  bool coprime_only;
  std::uint64_t top_k;
  std::vector<ExactHit> exact_solutions;
  std::vector<NearMiss> near_misses;  // (abs_gap, z, y, x) ascending
  SearchStats stats;
};

/// Exhaustive scan of all x < y < z <= bound. Exact solutions are collected
/// separately (and expected absent); near misses are ranked by
/// (abs_gap, z, y, x). The residue prefilter only gates the exact-solution
/// test; every kept candidate participates in the ranking.
SearchReport near_miss_scan(const SearchWindow& w);

struct CongruenceTally {
  unsigned long p;
  std::uint64_t bound;
  std::uint64_t triples = 0;
  std::uint64_t fermat_little_holds = 0;  // (x+y-z)^p == x+y-z (mod p)
  std::uint64_t zy_congruent_x = 0;       // z-y == x (mod p)
};

/// Congruence statistics over the same candidate window.
CongruenceTally congruence_stats(const SearchWindow& w);

std::string search_report_json(const SearchReport& r);
std::string search_report_csv(const SearchReport& r);
std::string search_report_table(const SearchReport& r);
std::string congruence_tally_json(const CongruenceTally& t);
std::string congruence_tally_table(const CongruenceTally& t);

/// The residue prefilter: a set of small primes q = 1 (mod p) with
/// precomputed p-th-power tables. A candidate may be an exact solution only
/// if x^p + y^p = z^p holds modulo every filter prime.
class ResidueFilter {
 public:
  ResidueFilter(unsigned long p, bool enabled);
  bool might_be_exact(std::uint64_t x, std::uint64_t y, std::uint64_t z) const;
  std::uint64_t modulus() const { return modulus_; }
  std::size_t prime_count() const { return primes_.size(); }

 private:
  std::vector<std::uint32_t> primes_;
  std::vector<std::vector<std::uint32_t>> pow_tables_;
  std::uint64_t modulus_ = 1;
};

}  // namespace fermatlab
