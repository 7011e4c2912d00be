#pragma once

#include <string>
#include <vector>

namespace qws {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

int criterion_count();
std::string criterion_name(int id);

// Runs one acceptance criterion at desk scale. Throws invalid_parameter for
// unknown ids; measured values land in CriterionResult::detail.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all_criteria();

}  // namespace qws
