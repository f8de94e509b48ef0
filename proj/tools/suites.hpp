#pragma once

// Verification suites behind `rowmotion verify`.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rowmotion::cli {

struct SuiteBounds {
  int min = 1;          // smallest family parameter (table2)
  int max = 4;          // largest family parameter
  int max_cells = 30;   // largest poset (rooks, halfrook)
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::json counterexample;  // null unless the check failed with data
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite or insane bounds, and
// lets ResourceError escape.
SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds);

}  // namespace rowmotion::cli
