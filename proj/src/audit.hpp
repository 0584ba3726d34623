/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace fermatlab {

enum class Strategy { Symbolic, Exhaustive, Sampled };

enum class Outcome {
  VerifiedInDomain,
  Falsified,
  Vacuous,
  FormulaMismatch,
  // A claim whose domain could not be covered within the budget. Only ever
  // produced by budget refusal, never silently upgraded to a verdict.
  Incomplete,
};

const char* strategy_name(Strategy s);
const char* outcome_name(Outcome o);

inline constexpr std::uint64_t kDefaultSeed = 0xF3A7;

struct CheckBudget {
  std::vector<unsigned long> p_set = {3, 5, 7, 11, 13};
  unsigned long exhaustive_bound = 300;
  std::uint64_t sample_count = 10000;
  unsigned var_bits = 256;
  std::uint64_t max_checks = 20'000'000;
  std::uint64_t seed = kDefaultSeed;

  /// Exhaustive scans run over p_set intersected with {3, 5, 7}.
  std::vector<unsigned long> exhaustive_p_set() const;
};

struct Verdict {
  std::string id;
  Outcome outcome = Outcome::Vacuous;
  nlohmann::ordered_json witness;  // null when absent
  std::uint64_t checked_count = 0;
  std::string notes;
};

struct ClaimInfo {
  std::string id;
  std::string eq_ref;
  std::string statement;
  Strategy strategy;
};

/// Registered claims, in report order.
const std::vector<ClaimInfo>& claim_registry();
bool claim_exists(const std::string& id);

struct UnknownClaimError : DomainError {
  using DomainError::DomainError;
};

/// Runs one claim. Unknown ids raise UnknownClaimError; an exhaustive domain
/// larger than the budget raises BudgetError.
Verdict run_claim(const std::string& id, const CheckBudget& budget);

/// Re-evaluates a FALSIFIED witness through the originating modules.
/// True when the recorded violation reproduces.
bool replay_witness(const std::string& id,
                    const nlohmann::ordered_json& witness);

struct AuditReport {
  std::uint64_t seed = kDefaultSeed;
  CheckBudget budget;
  std::vector<Verdict> verdicts;  // registry order
  bool any_falsified() const;
};

/// Runs every registered claim. Per-claim budget refusals become INCOMPLETE
/// entries; the batch never aborts.
AuditReport run_all(const CheckBudget& budget, unsigned workers = 1);

/// Runs a subset of claims (registry order preserved).
AuditReport run_selected(const std::vector<std::string>& ids,
                         const CheckBudget& budget, unsigned workers = 1);

/// schema_version 1. Field order is fixed. When deterministic, no wall-clock
/// or host metadata is included.
std::string audit_report_json(const AuditReport& report, bool deterministic);
std::string audit_report_table(const AuditReport& report);

/// Seeded generator for sampled domains. Claims derive their stream from the
/// budget seed and their own id, so verdicts do not depend on execution
/// order.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t u64() { return gen_(); }
  /// Uniform in [0, 2^nbits).
  Integer bits(unsigned nbits);
  /// Uniform in [1, 2^nbits).
  Integer positive(unsigned nbits);
  bool flip() { return (u64() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t claim_stream_seed(std::uint64_t base, std::string_view id);

}  // namespace fermatlab
