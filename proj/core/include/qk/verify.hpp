#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qk {

// One measured check: pass iff `measured relation threshold` held.
struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<=", "<", ">", ">=", "==", "in"
  double seconds = 0.0;
};

// Acceptance criteria, numbered 1..13. Thresholds are fixed in code.
std::vector<CheckResult> run_criterion(int criterion, std::uint64_t seed);
int num_criteria();

// Named suites grouping the criteria: classical, spectra, thresholds, sync,
// twistflip, frustration, bounds, structure, all.
std::vector<std::string> verify_suites();
bool is_verify_suite(const std::string& name);
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& checks);
nlohmann::json checks_to_json(const std::vector<CheckResult>& checks, std::uint64_t seed);

}  // namespace qk
