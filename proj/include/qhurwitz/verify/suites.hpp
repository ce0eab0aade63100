#pragma once

#include "qhurwitz/verify/checks.hpp"

namespace qhurwitz::verify {

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> calibration;
  bool passed() const;
};

// suite ∈ {exact, series, mellin, matrix, all}; checks are ordered by id.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& o);

bool is_suite(const std::string& name);

}  // namespace qhurwitz::verify
