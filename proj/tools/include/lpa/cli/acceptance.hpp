#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpa/cli/report.hpp"
#include "lpa/multiplier.hpp"

namespace lpa::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;  // one line for the console
  nlohmann::json detail = nlohmann::json::object();
  std::vector<Table> tables;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  int iters = kDefaultIterations;
};

inline constexpr int kCriterionCount = 12;

// Runs one criterion; ids are 1..kCriterionCount.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

// All criteria, concurrently, returned in id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace lpa::cli
