#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lpa/cli/config.hpp"
#include "lpa/cli/report.hpp"

namespace lpa::cli {

RunReport cmd_norm(const NormParams& params);
RunReport cmd_ortho(const OrthoParams& params);
RunReport cmd_inner(const InnerParams& params);
RunReport cmd_multnorm(const MultnormParams& params);
RunReport cmd_geometry(const GeometryParams& params);
RunReport cmd_functional(const FunctionalParams& params);
RunReport cmd_report_all(const ReportAllParams& params);

// Parses an already resolved configuration and dispatches. The inputs echo
// of the returned report is the configuration itself.
RunReport run_command(const std::string& command, const nlohmann::json& config);

}  // namespace lpa::cli
