#pragma once

#include <string>
#include <vector>

namespace plum::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Criteria 1..10 in order.
std::vector<CriterionResult> run_all();
CriterionResult run_criterion(int id);

}  // namespace plum::acceptance
