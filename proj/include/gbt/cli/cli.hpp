#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace gbt::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitClaimFailed = 1,
    kExitInputError = 2,
    kExitInconclusive = 3,
};

struct RunConfig {
    std::size_t dim = 3;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string format = "text";

    // Throws StructuralError when a field is out of range.
    void validate() const;
    nlohmann::json to_json() const;
};

const char* tool_version() noexcept;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbt::cli
