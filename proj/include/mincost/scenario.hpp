#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mincost/types.hpp"

namespace mincost {

struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

/// Overrides applied on top of a scenario file.
struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<double> certification_tol;
};

/// Executes a scenario document and returns the JSON report. The scenario
/// kinds are min_error, min_cost, bound, sequence, helstrom_check and
/// oracle; every scalar result lands under report["values"] and embedded
/// "expect" entries are checked against those values, with the outcomes
/// recorded under report["expectations"].
nlohmann::json run_scenario(const nlohmann::json& scenario, const RunOptions& options = {});

/// Loads and runs a scenario file.
nlohmann::json run_scenario_file(const std::string& path, const RunOptions& options = {});

/// True when every embedded expectation in a report passed.
bool all_expectations_pass(const nlohmann::json& report);

} // namespace mincost
