#pragma once

#include <string>
#include <vector>

namespace rank3kit {

enum class CheckStatus { pass, fail, skipped };

const char *to_string(CheckStatus s);

/// One machine-readable verdict.  `skipped` is reserved for capacity skips
/// and parameter shapes outside the covered hypotheses; a recorded
/// discrepancy between a source claim and the computed value is a passing
/// check whose detail carries the DISCREPANCY marker.
struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

struct SuiteOptions {
  std::string catalog_path = "data/catalog.json";
};

/// Runs the named suite, or all of them for "all" / "".  Suites:
/// examples-6, family-scan, lemma-2-invariants, aut-orbit-table, catalog.
/// Results are sorted by (suite, name) and deterministic.  Throws
/// std::invalid_argument for an unknown suite name.
std::vector<CheckResult> verify_paper_suite(const std::string &selector,
                                            const SuiteOptions &options = {});

/// 0 if all checks pass, 1 if any failed, 2 if none failed but some were
/// skipped for capacity/coverage reasons.
int suite_exit_code(const std::vector<CheckResult> &results);

} // namespace rank3kit
