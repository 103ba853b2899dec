#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqrtnfa/budget.hpp"
#include "sqrtnfa/fooling.hpp"
#include "sqrtnfa/proof_cases.hpp"

namespace sqrtnfa {

/// Outcome of the full reproduction pipeline for one n.
struct Report {
  std::size_t n = 0;
  /// States of the square-root construction applied to witness(n).
  std::uint64_t upper_bound_states = 0;
  /// Size of the certified fooling set; 0 when certification failed.
  std::uint64_t certified_lower_bound = 0;
  /// (n-1)(n-2)(n-3), the bound known before the witness family.
  std::uint64_t previous_bound = 0;
  std::string fooling_verdict;
  std::optional<TriplePair> case_counterexample;
  std::optional<TriplePair> pairwise_counterexample;
  /// (phase, milliseconds) in execution order.
  std::vector<std::pair<std::string, double>> timings;

  bool case_check_passed() const { return !case_counterexample && !pairwise_counterexample; }
  bool passed() const {
    return certified_lower_bound == upper_bound_states && upper_bound_states == std::uint64_t{n} * n * n &&
           case_check_passed();
  }

  /// Aligned human-readable table.
  std::string table() const;
  /// One key=value per line; timing keys are prefixed "time_".
  std::string key_values() const;
};

std::uint64_t previous_lower_bound(std::size_t n);

/// witness -> sqrt_nfa -> certify_lower_bound -> verify_cases and
/// pairwise_contradiction. All phases run; failures are recorded in the report.
/// Throws DomainError for n < 6 and BudgetError from any phase.
Report run_report(std::size_t n, const Budget& budget = {}, VerifyOptions options = {});

}  // namespace sqrtnfa
