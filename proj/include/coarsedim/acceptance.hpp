#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coarsedim/cover.hpp"

namespace coarsedim {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Counts, witnesses of violations, or the reason for failure.
  std::string detail;
  double seconds = 0;
  /// Wall-clock limit in seconds; 0 when the criterion has none.
  double limitSeconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20261016;
  std::uint64_t nodeBudget = kDefaultNodeBudget;
};

CriterionResult checkOrdAxioms(const AcceptanceOptions& options);
CriterionResult checkTruncatedOrd(const AcceptanceOptions& options);
CriterionResult checkOmegaClosedForm(const AcceptanceOptions& options);
CriterionResult checkSXiStructure(const AcceptanceOptions& options);
CriterionResult checkMetric(const AcceptanceOptions& options);
CriterionResult checkA2OneDim(const AcceptanceOptions& options);
CriterionResult checkA2TwoDim(const AcceptanceOptions& options);
CriterionResult checkPartitionChain(const AcceptanceOptions& options);
CriterionResult checkZetaCofinality(const AcceptanceOptions& options);

/// Runs every criterion in order, calling `progress` after each one.
std::vector<CriterionResult> runAcceptance(const AcceptanceOptions& options,
                                           const std::function<void(const CriterionResult&)>& progress = {});

/// "PASS [3] name (0.12 s / limit 60 s): detail"
std::string formatCriterion(const CriterionResult& result);

}  // namespace coarsedim
