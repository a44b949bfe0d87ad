#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace matchram {

/// Knobs shared by the verification suites. Defaults match the registered
/// acceptance runs.
struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 200;           // randomized instances per lemma suite
  int max_n = 8;              // order cap for the decomposition sweep
  int per_size = 500;         // graphs per order in the decomposition sweep
  int q = 2;                  // colour count for the exactness table
  int max_bound = 7;          // bound cap for the exactness table
  int theorem_trials = 10000; // sampled trials for the s>=2 regime
  bool checked = true;        // run pipeline stages with contracts on
};

struct SuiteCheck {
  std::string claim;
  int instances = 0;
  int failures = 0;
  nlohmann::json detail;  // notes on the first failures, parameters, counts
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;
  nlohmann::json to_json() const;
};

/// Registered suites: ge, cl, sharp, saturate, isolate, sigma, decycle,
/// distil, smallcomps, discussion, theorem, oracle, connector.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace matchram
