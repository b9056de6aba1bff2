#pragma once

#include "hjoints/report.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hjoints {

struct CriterionResult {
  int id = 0;
  std::string title;
  CheckStatus status = CheckStatus::Info;
  double seconds = 0.0;
  std::vector<CheckRecord> checks;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  std::set<int> only;  // empty runs every criterion
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// "criterion 3  PASS  geometry agrees with counting  (1.2 s)"
std::string criterion_line(const CriterionResult& result);

// Folds the criteria into one report; FAIL in any criterion fails the report.
VerificationReport acceptance_report(const std::vector<CriterionResult>& results, std::uint64_t seed);

}  // namespace hjoints
