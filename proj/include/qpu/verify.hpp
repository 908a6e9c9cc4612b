#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpu {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  // evidence and failure lines
};

struct VerifyOptions {
  std::string data;  // directory with the bundled tables; empty = default
  int threads = 1;
};

// Runs one numbered verification check (1-11).
CriterionResult run_criterion(int index, const VerifyOptions& opts);

// All checks, in order.
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opts);

}  // namespace qpu
