#pragma once

#include "gbt/cli/cli.hpp"
#include "gbt/core/reports.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace gbt::cli {

struct CommandOutput {
    nlohmann::json result;
    int exit_code = kExitPass;
    std::vector<std::string> text;
};

int exit_code_for(Verdict v) noexcept;

CommandOutput check_axioms_command(const RunConfig& cfg);
// Exactly one of file / builtin is nonempty.
CommandOutput classify_instrument_command(const RunConfig& cfg, const std::string& file, const std::string& builtin);
CommandOutput verify_theorems_command(const RunConfig& cfg, const std::string& which, std::size_t refinements);
CommandOutput filter_run_command(const RunConfig& cfg, const std::string& outcomes_file, const std::string& belief_file);
CommandOutput ep_check_command(const RunConfig& cfg, const std::string& scenario_file, const std::string& assignment_file,
                               const std::string& builtin);

}  // namespace gbt::cli
