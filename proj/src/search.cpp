/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "search.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

namespace fermatlab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t mod) {
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t validated_bound(const SearchWindow& w) {
  if (w.bound < 3) throw DomainError("search: require bound >= 3");
  if (w.top_k < 1) throw DomainError("search: require top_k >= 1");
  if (!w.bound.fits_ulong_p())
    throw BudgetError("search: bound exceeds the candidate budget");
  const std::uint64_t n = w.bound.get_ui();
  // C(n, 3) without overflow for any n that could pass the budget test.
  const long double approx = (long double)n * (n - 1) * (n - 2) / 6.0L;
  if (approx > (long double)w.max_candidates * 1.01L + 16)
    throw BudgetError("search: window holds about " +
                      std::to_string((unsigned long long)approx) +
                      " candidates, over the budget of " +
                      std::to_string(w.max_candidates));
  const std::uint64_t count = n * (n - 1) / 2 * (n - 2) / 3;
  if (count > w.max_candidates)
    throw BudgetError("search: window holds " + std::to_string(count) +
                      " candidates, over the budget of " +
                      std::to_string(w.max_candidates));
  return n;
}

bool near_miss_less(const NearMiss& s, const NearMiss& t) {
  if (s.abs_gap != t.abs_gap) return s.abs_gap < t.abs_gap;
  if (s.z != t.z) return s.z < t.z;
  if (s.y != t.y) return s.y < t.y;
  return s.x < t.x;
}

struct WorkerResult {
  std::vector<ExactHit> exact;
  std::vector<NearMiss> misses;  // locally sorted, at most top_k
  SearchStats stats;             // counters only
};

void scan_range(const SearchWindow& w, const std::vector<Integer>& powers,
                const ResidueFilter& filter, std::uint64_t z_lo,
                std::uint64_t z_hi, WorkerResult& out) {
  // Bounded selection buffer: keep the worst at the back.
  auto push_miss = [&](NearMiss&& m) {
    if (out.misses.size() == w.top_k && !near_miss_less(m, out.misses.back()))
      return;
    auto it = std::lower_bound(out.misses.begin(), out.misses.end(), m,
                               near_miss_less);
    out.misses.insert(it, std::move(m));
    if (out.misses.size() > w.top_k) out.misses.pop_back();
  };

  Integer gap;
  for (std::uint64_t z = z_lo; z < z_hi; ++z) {
    for (std::uint64_t y = 2; y < z; ++y) {
      const std::uint64_t gyz = std::gcd(y, z);
      for (std::uint64_t x = 1; x < y; ++x) {
        ++out.stats.scanned;
        if (w.coprime_only && std::gcd(x, gyz) != 1) continue;
        ++out.stats.kept;
        gap = powers[x] + powers[y] - powers[z];
        if (filter.might_be_exact(x, y, z)) {
          ++out.stats.exact_checked;
          if (gap == 0) {
            out.exact.push_back({x, y, z});
            continue;
          }
        } else {
          ++out.stats.prefilter_rejected;
          if (gap == 0)
            throw IntegrityError("search: residue prefilter rejected an "
                                 "exact solution");
        }
        push_miss({x, y, z, gap, abs(gap)});
      }
    }
  }
}

}  // namespace

ResidueFilter::ResidueFilter(unsigned long p, bool enabled) {
  if (!enabled) return;
  // Small primes q = 1 (mod p): the p-th powers form a small subgroup, so
  // the congruence x^p + y^p = z^p (mod q) is selective. Product capped at
  // 2^32.
  constexpr std::uint64_t kCap = std::uint64_t(1) << 32;
  for (std::uint32_t q = 2 * p + 1; primes_.size() < 8; q += 2 * p) {
    if (!is_prime(Integer(q))) continue;
    if (modulus_ > kCap / q) break;
    modulus_ *= q;
    primes_.push_back(q);
    std::vector<std::uint32_t> table(q);
    for (std::uint32_t t = 0; t < q; ++t)
      table[t] = static_cast<std::uint32_t>(pow_mod_u64(t, p, q));
    pow_tables_.push_back(std::move(table));
  }
}

bool ResidueFilter::might_be_exact(std::uint64_t x, std::uint64_t y,
                                   std::uint64_t z) const {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const std::uint32_t q = primes_[i];
    const auto& table = pow_tables_[i];
    const std::uint64_t lhs = table[x % q] + table[y % q];
    if (lhs % q != table[z % q]) return false;
  }
  return true;
}

SearchReport near_miss_scan(const SearchWindow& w) {
  const std::uint64_t bound = validated_bound(w);

  std::vector<Integer> powers(bound + 1);
  for (std::uint64_t t = 0; t <= bound; ++t)
    powers[t] = integer_pow(Integer(t), w.p.value());

  const ResidueFilter filter(w.p.value(), w.use_prefilter);

  const unsigned workers = std::max(1u, w.workers);
  // Deterministic z-chunks; results merged in chunk order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
  {
    const std::uint64_t z_first = 3, z_last = bound + 1;
    const std::uint64_t span = z_last - z_first;
    const std::uint64_t per = std::max<std::uint64_t>(1, span / (4 * workers));
    for (std::uint64_t lo = z_first; lo < z_last; lo += per)
      chunks.emplace_back(lo, std::min(lo + per, z_last));
  }

  std::vector<WorkerResult> results(chunks.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i)
      scan_range(w, powers, filter, chunks[i].first, chunks[i].second,
                 results[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= chunks.size()) return;
          scan_range(w, powers, filter, chunks[i].first, chunks[i].second,
                     results[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  SearchReport report;
  report.p = w.p.value();
  report.bound = bound;
  report.coprime_only = w.coprime_only;
  report.top_k = w.top_k;
  report.stats.window_triples = bound * (bound - 1) / 2 * (bound - 2) / 3;
  report.stats.prefilter_modulus_prime_count = filter.prime_count();
  report.stats.prefilter_modulus = filter.modulus();

  std::vector<NearMiss> all;
  for (auto& r : results) {
    report.stats.scanned += r.stats.scanned;
    report.stats.kept += r.stats.kept;
    report.stats.prefilter_rejected += r.stats.prefilter_rejected;
    report.stats.exact_checked += r.stats.exact_checked;
    for (auto& e : r.exact) report.exact_solutions.push_back(e);
    for (auto& m : r.misses) all.push_back(std::move(m));
  }
  std::sort(report.exact_solutions.begin(), report.exact_solutions.end(),
            [](const ExactHit& s, const ExactHit& t) {
              return std::tie(s.z, s.y, s.x) < std::tie(t.z, t.y, t.x);
            });
  std::sort(all.begin(), all.end(), near_miss_less);
  if (all.size() > w.top_k) all.resize(w.top_k);
  report.near_misses = std::move(all);
  return report;
}

CongruenceTally congruence_stats(const SearchWindow& w) {
  const std::uint64_t bound = validated_bound(w);
  const std::uint64_t p = w.p.value();
  CongruenceTally tally;
  tally.p = p;
  tally.bound = bound;
  for (std::uint64_t z = 3; z <= bound; ++z) {
    for (std::uint64_t y = 2; y < z; ++y) {
      const std::uint64_t gyz = std::gcd(y, z);
      for (std::uint64_t x = 1; x < y; ++x) {
        if (w.coprime_only && std::gcd(x, gyz) != 1) continue;
        ++tally.triples;
        // x + y - z can be negative; work with a canonical residue.
        const std::uint64_t m = (x + y + p * z - z) % p;
        if (pow_mod_u64(m, p, p) == m % p) ++tally.fermat_little_holds;
        if ((z - y) % p == x % p) ++tally.zy_congruent_x;
      }
    }
  }
  return tally;
}

std::string search_report_json(const SearchReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["bound"] = r.bound;
  j["coprime_only"] = r.coprime_only;
  j["top_k"] = r.top_k;
  ordered_json exact = ordered_json::array();
  for (const auto& e : r.exact_solutions)
    exact.push_back(ordered_json{{"x", e.x}, {"y", e.y}, {"z", e.z}});
  j["exact_solutions"] = std::move(exact);
  ordered_json misses = ordered_json::array();
  for (const auto& m : r.near_misses)
    misses.push_back(ordered_json{{"x", m.x},
                                  {"y", m.y},
                                  {"z", m.z},
                                  {"gap", m.gap.get_str()},
                                  {"abs_gap", m.abs_gap.get_str()}});
  j["near_misses"] = std::move(misses);
  j["stats"] = ordered_json{
      {"window_triples", r.stats.window_triples},
      {"scanned", r.stats.scanned},
      {"kept", r.stats.kept},
      {"prefilter_rejected", r.stats.prefilter_rejected},
      {"exact_checked", r.stats.exact_checked},
      {"prefilter_primes", r.stats.prefilter_modulus_prime_count},
      {"prefilter_modulus", r.stats.prefilter_modulus},
  };
  return j.dump(2);
}

std::string search_report_csv(const SearchReport& r) {
  std::ostringstream os;
  os << "x,y,z,gap\n";
  for (const auto& e : r.exact_solutions)
    os << e.x << ',' << e.y << ',' << e.z << ",0\n";
  for (const auto& m : r.near_misses)
    os << m.x << ',' << m.y << ',' << m.z << ',' << m.gap << '\n';
  return os.str();
}

std::string search_report_table(const SearchReport& r) {
  std::ostringstream os;
  os << "search: p=" << r.p << " bound=" << r.bound
     << (r.coprime_only ? " coprime" : " all") << "\n";
  os << "candidates: " << r.stats.scanned << " scanned, " << r.stats.kept
     << " kept\n";
  os << "exact solutions: " << r.exact_solutions.size() << "\n";
  for (const auto& e : r.exact_solutions)
    os << "  (" << e.x << ", " << e.y << ", " << e.z << ")\n";
  os << "near misses (top " << r.top_k << "):\n";
  for (const auto& m : r.near_misses)
    os << "  (" << m.x << ", " << m.y << ", " << m.z << ")  gap=" << m.gap
       << "\n";
  return os.str();
}

std::string congruence_tally_json(const CongruenceTally& t) {
  ordered_json j;
  j["p"] = t.p;
  j["bound"] = t.bound;
  j["triples"] = t.triples;
  j["fermat_little_holds"] = t.fermat_little_holds;
  j["zy_congruent_x"] = t.zy_congruent_x;
  return j.dump(2);
}

std::string congruence_tally_table(const CongruenceTally& t) {
  std::ostringstream os;
  os << "congruence stats: p=" << t.p << " bound=" << t.bound << "\n";
  os << "triples: " << t.triples << "\n";
  os << "(x+y-z)^p == x+y-z (mod p): " << t.fermat_little_holds << "\n";
  os << "z-y == x (mod p): " << t.zy_congruent_x << "\n";
  return os.str();
}

}  // namespace fermatlab
