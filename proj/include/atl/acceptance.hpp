#pragma once

#include <string>
#include <vector>

#include "atl/config.hpp"

namespace atl::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// The full acceptance suite.  Every criterion builds its own scenario from
// the given base config (seeds, smears and event counts are pinned inside).
std::vector<CriterionResult> run_all(const config::RunConfig& base);

}  // namespace atl::acceptance
