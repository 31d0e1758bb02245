#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coarsedim/io.hpp"

namespace coarsedim {

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitBudget = 2,
  kExitNegative = 3,
  kExitInconclusive = 4,
};

/// Everything one invocation needs. Fields unused by the chosen command stay empty.
struct RunConfig {
  std::string command;  // "ord", "family", "sxi", "space", "cover", "partition", "selftest"
  std::string action;   // e.g. "member", "search"; empty for "ord" and "selftest"

  // Inputs.
  std::string familyPath;
  std::string pointsPath;
  std::string coverPath;
  std::string instancePath;
  std::string xi;
  std::string sigma;
  std::string targets;
  std::string tau;
  std::string box;
  std::string p;
  std::string q;
  std::vector<Coord> radii;
  Coord bound = 0;
  unsigned n = 0;
  bool shifted = false;
  bool table = false;
  bool probes = true;
  std::string mode = "exhaustive";

  // Budgets.
  std::uint64_t nodeBudget = 0;
  std::uint64_t enumerationBudget = 0;
  double timeLimit = 0;

  std::uint64_t seed = 0;
  std::string outPath;
  std::string csvPath;
  bool json = false;
};

struct RunOutcome {
  int exitCode = kExitOk;
  Json report;
  /// Plain-text rendering for stdout when --json is not given.
  std::string text;
};

/// Fills unset budgets from COARSEDIM_NODE_BUDGET, COARSEDIM_ENUM_BUDGET,
/// COARSEDIM_TIME_LIMIT, then the library defaults. Throws ParseError on
/// non-positive or malformed values.
void applyBudgetDefaults(RunConfig& config);

/// Executes one command. Errors become exit codes and an "error" field.
RunOutcome run(const RunConfig& config);

/// Parses argv, runs, writes the report to --out and stdout; returns the exit code.
int runMain(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace coarsedim
