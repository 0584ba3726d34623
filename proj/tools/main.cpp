/*
 * (C) Copyright 2026 fermatlab contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Command-line front end. Talks to the library exclusively through the C
 * API in fermatlab/fermatlab.h.
 */
#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "fermatlab/fermatlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;
constexpr int kExitFalsified = 4;

int exit_code_for(fl_status status) {
  switch (status) {
    case FL_OK: return kExitOk;
    case FL_EINTEGRITY: return kExitIntegrity;
    case FL_EINVAL:
    case FL_EDOMAIN:
    case FL_EUNKNOWN_CLAIM:
    case FL_EBUDGET: return kExitUsage;
    case FL_EINTERNAL: return kExitIntegrity;
  }
  return kExitIntegrity;
}

struct Options {
  std::string format = "table";
  std::string out_path;
  std::uint64_t seed = 0xF3A7;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool deterministic = false;
  bool fail_on_falsified = false;
};

fl_format format_of(const std::string& name) {
  if (name == "table") return FL_FORMAT_TABLE;
  if (name == "json") return FL_FORMAT_JSON;
  if (name == "csv") return FL_FORMAT_CSV;
  throw CLI::ValidationError("--format", "expected table, json or csv");
}

int emit(fl_result* result, const Options& opts) {
  const char* text = fl_result_text(result, format_of(opts.format));
  if (text == nullptr) {
    std::cerr << "fermatlab: format '" << opts.format
              << "' is not available for this subcommand\n";
    fl_result_free(result);
    return kExitUsage;
  }
  int code = kExitOk;
  if (opts.fail_on_falsified && fl_result_any_falsified(result))
    code = kExitFalsified;
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "fermatlab: cannot open " << opts.out_path << "\n";
      fl_result_free(result);
      return kExitUsage;
    }
    out << text;
  }
  fl_result_free(result);
  return code;
}

int finish(fl_status status, fl_result* result, const Options& opts) {
  if (status != FL_OK) {
    std::cerr << "fermatlab: " << fl_last_error() << "\n";
    return exit_code_for(status);
  }
  return emit(result, opts);
}

std::uint64_t parse_seed(const std::string& text) {
  return std::stoull(text, nullptr, 0);  // accepts decimal and 0x forms
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the arithmetic of x^p + y^p = z^p"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fl_version()));

  Options opts;
  if (const char* env_seed = std::getenv("FERMATLAB_SEED")) {
    try {
      opts.seed = parse_seed(env_seed);
    } catch (const std::exception&) {
      std::cerr << "fermatlab: FERMATLAB_SEED is not a number\n";
      return kExitUsage;
    }
  }
  std::string seed_text;
  app.add_option("--format", opts.format, "output format: table, json, csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", opts.out_path, "write the data output to a file");
  app.add_option("--seed", seed_text, "seed for sampled domains");
  app.add_option("--workers", opts.workers, "parallel workers");
  app.add_flag("--deterministic", opts.deterministic,
               "omit wall-clock metadata from reports");
  app.add_flag("--fail-on-falsified", opts.fail_on_falsified,
               "exit 4 when an audited claim is FALSIFIED");

  // phi p u v
  auto* phi_cmd = app.add_subcommand("phi", "evaluate the power-sum form");
  std::string p_arg, u_arg, v_arg;
  phi_cmd->add_option("p", p_arg, "odd prime")->required();
  phi_cmd->add_option("u", u_arg, "integer")->required();
  phi_cmd->add_option("v", v_arg, "integer")->required();

  // forms p u v [--alt]
  auto* forms_cmd = app.add_subcommand("forms", "evaluate the A/D split");
  std::string fp_arg, fu_arg, fv_arg;
  bool alt = false;
  forms_cmd->add_option("p", fp_arg, "odd prime")->required();
  forms_cmd->add_option("u", fu_arg, "integer")->required();
  forms_cmd->add_option("v", fv_arg, "integer")->required();
  forms_cmd->add_flag("--alt", alt, "alternating forms (second argument "
                                    "negated)");

  // kpoly p [--method ...] [--mod-p]
  auto* kpoly_cmd = app.add_subcommand("kpoly", "the gap quotient polynomial");
  std::string kp_arg, method = "division";
  bool mod_p = false;
  kpoly_cmd->add_option("p", kp_arg, "odd prime")->required();
  kpoly_cmd->add_option("--method", method, "division or explicit")
      ->check(CLI::IsMember({"division", "explicit"}));
  kpoly_cmd->add_flag("--mod-p", mod_p, "render the x->a reduction mod p");

  // dickson --z-max N
  auto* dickson_cmd =
      app.add_subcommand("dickson", "enumerate primitive right triples");
  std::string z_max;
  dickson_cmd->add_option("--z-max", z_max, "hypotenuse bound (>= 5)")
      ->required();

  // decompose p x y z
  auto* dec_cmd =
      app.add_subcommand("decompose", "difference-pair decomposition record");
  std::string dp_arg, dx_arg, dy_arg, dz_arg;
  dec_cmd->add_option("p", dp_arg, "odd prime")->required();
  dec_cmd->add_option("x", dx_arg, "integer")->required();
  dec_cmd->add_option("y", dy_arg, "integer")->required();
  dec_cmd->add_option("z", dz_arg, "integer")->required();

  // audit [--claims LIST] [budget flags]
  auto* audit_cmd = app.add_subcommand("audit", "run the claim registry");
  std::string claims_list, p_set;
  fl_audit_budget budget{};
  std::uint64_t exhaustive_bound = 0, sample_count = 0, max_checks = 0;
  std::uint32_t var_bits = 0;
  bool p_set_given = false;
  audit_cmd->add_option("--claims", claims_list,
                        "comma-separated claim ids (default: all)");
  audit_cmd->add_option("--p-set", p_set,
                        "comma-separated odd primes; empty for an empty "
                        "domain");
  audit_cmd->add_option("--exhaustive-bound", exhaustive_bound,
                        "bound for exhaustive scans (default 300)");
  audit_cmd->add_option("--samples", sample_count,
                        "points per sampled claim (default 10000)");
  audit_cmd->add_option("--sample-bits", var_bits,
                        "bit size of sampled variables (default 256)");
  audit_cmd->add_option("--max-checks", max_checks,
                        "refusal threshold for exhaustive domains");

  // search p --bound N [--top-k K]
  auto* search_cmd = app.add_subcommand("search", "near-miss scan");
  std::string sp_arg, bound_arg;
  std::uint64_t top_k = 10;
  bool all_triples = false, congruence = false;
  search_cmd->add_option("p", sp_arg, "odd prime")->required();
  search_cmd->add_option("--bound", bound_arg, "max z (>= 3)")->required();
  search_cmd->add_option("--top-k", top_k, "near misses to keep");
  search_cmd->add_flag("--all", all_triples,
                       "include non-coprime triples (default: coprime only)");
  search_cmd->add_flag("--congruence-stats", congruence,
                       "emit congruence tallies instead of the scan report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  p_set_given = audit_cmd->count("--p-set") > 0;

  if (!seed_text.empty()) {
    try {
      opts.seed = parse_seed(seed_text);
    } catch (const std::exception&) {
      std::cerr << "fermatlab: --seed is not a number\n";
      return kExitUsage;
    }
  }

  fl_result* result = nullptr;
  if (*phi_cmd) {
    return finish(fl_phi(p_arg.c_str(), u_arg.c_str(), v_arg.c_str(), &result),
                  result, opts);
  }
  if (*forms_cmd) {
    return finish(fl_forms(fp_arg.c_str(), fu_arg.c_str(), fv_arg.c_str(),
                           alt ? 1 : 0, &result),
                  result, opts);
  }
  if (*kpoly_cmd) {
    return finish(
        fl_kpoly(kp_arg.c_str(), method.c_str(), mod_p ? 1 : 0, &result),
        result, opts);
  }
  if (*dickson_cmd) {
    return finish(fl_dickson(z_max.c_str(), &result), result, opts);
  }
  if (*dec_cmd) {
    return finish(fl_decompose(dp_arg.c_str(), dx_arg.c_str(), dy_arg.c_str(),
                               dz_arg.c_str(), &result),
                  result, opts);
  }
  if (*audit_cmd) {
    budget.p_set = p_set_given ? p_set.c_str() : nullptr;
    budget.exhaustive_bound = exhaustive_bound;
    budget.sample_count = sample_count;
    budget.var_bits = var_bits;
    budget.max_checks = max_checks;
    return finish(fl_audit(claims_list.empty() ? nullptr : claims_list.c_str(),
                           &budget, opts.seed, opts.deterministic ? 1 : 0,
                           opts.workers, &result),
                  result, opts);
  }
  if (*search_cmd) {
    if (congruence) {
      return finish(fl_congruence_stats(sp_arg.c_str(), bound_arg.c_str(),
                                        all_triples ? 0 : 1, &result),
                    result, opts);
    }
    return finish(fl_search(sp_arg.c_str(), bound_arg.c_str(), top_k,
                            all_triples ? 0 : 1, opts.workers, &result),
                  result, opts);
  }
  return kExitUsage;
}
