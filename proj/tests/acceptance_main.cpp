// Acceptance gate: one numbered end-to-end check per invocation, or all of
// them. Prints exactly one PASS/FAIL line per check plus indented detail
// lines, and exits nonzero when any requested check fails.
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "qpu/verify.hpp"

namespace {

int clamped_threads() {
  if (const char* env = std::getenv("QPU_THREADS"); env != nullptr && *env != '\0')
    return std::max(1, std::atoi(env));
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return (int)std::min(hw, 8u);
}

int print_result(const qpu::CriterionResult& r) {
  std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.index << ": "
            << r.name << "\n";
  for (const auto& d : r.details) std::cout << "  " << d << "\n";
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;  // 0 = all
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      criterion = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 2;
    }
  }
  if (criterion < 0 || criterion > 11) {
    std::cerr << "criterion number must be in [1, 11]\n";
    return 2;
  }

  qpu::VerifyOptions opts;
  opts.threads = clamped_threads();

  try {
    if (criterion != 0) return print_result(qpu::run_criterion(criterion, opts));
    int failures = 0;
    for (const auto& r : qpu::run_all_criteria(opts)) failures += print_result(r);
    return failures == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
