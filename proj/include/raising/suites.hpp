#pragma once

#include <optional>
#include <string>
#include <vector>

namespace raising {

struct SuiteOptions {
  std::optional<int> k;  // unset: the suite's default range of k
  int max_size = -1;     // -1: suite default
  int max_p = -1;
  int max_length = -1;
  int m = -1;
  int n = -1;
};

struct SuiteFailure {
  std::string instance;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  long instances = 0;
  std::vector<SuiteFailure> failures;
  bool ok() const { return failures.empty(); }
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace raising
