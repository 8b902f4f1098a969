#pragma once

// Verification suites behind `coxinv verify`: each case compares a fast
// computation against an independent one.

#include <string>
#include <vector>

namespace coxinv {

struct CaseResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  bool allow_large = false;  // adds W(E7) to the exceptional suite
};

// classical, reduction, recurrence, dihedral, exceptional, analysis, or all.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite.
std::vector<CaseResult> run_suite(const std::string& suite, VerifyOptions options = {});

}  // namespace coxinv
