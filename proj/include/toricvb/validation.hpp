#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace toricvb {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::int64_t max_count_d = 30;   // count formula range 2..max_count_d
  std::int64_t max_oracle_d = 5;   // fast/oracle and brute-force census range 2..max_oracle_d
  std::size_t random_bundles = 200;
  std::size_t serre_bundles = 50;
  std::uint64_t seed = 0x5eed2025;
};

/// The full cross-validation suite: counting, reference lists, fast/oracle
/// equivalence, cohomology cross-path, known values, Chern and resolution
/// consistency, normalization, monotone inclusion and stability/duality.
/// `on_result` is called after each criterion finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

CriterionResult check_counting(const AcceptanceOptions& opts);
CriterionResult check_reference_lists(const AcceptanceOptions& opts);
CriterionResult check_fast_oracle(const AcceptanceOptions& opts);
CriterionResult check_cohomology_paths(const AcceptanceOptions& opts);
CriterionResult check_known_values(const AcceptanceOptions& opts);
CriterionResult check_chern(const AcceptanceOptions& opts);
CriterionResult check_resolution_chi(const AcceptanceOptions& opts);
CriterionResult check_normalization(const AcceptanceOptions& opts);
CriterionResult check_monotone_inclusion(const AcceptanceOptions& opts);
CriterionResult check_stability_duality(const AcceptanceOptions& opts);

}  // namespace toricvb
