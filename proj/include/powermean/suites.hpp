#pragma once

// Self-check suites behind the `verify` subcommand: each suite re-runs the
// documented invariants of one module and reports per-invariant pass counts.

#include <string>
#include <vector>

#include "powermean/search.hpp"

namespace powermean {

struct SuiteCheck {
  std::string name;
  long passed = 0;
  long total = 0;
  bool ok = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

SuiteReport run_means_suite();
SuiteReport run_lemmas_suite();
SuiteReport run_regions_suite();
SuiteReport run_search_suite(const SearchConfig& config);

}  // namespace powermean
