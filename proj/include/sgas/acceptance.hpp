#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgas {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  int threads = 1;
  std::uint64_t seed = 42;
  std::vector<int> only;  ///< empty runs all criteria
};

int acceptance_criterion_count();

CriterionResult run_criterion(int id, const AcceptanceOptions& options);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "[PASS] 3 closed forms: ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace sgas
