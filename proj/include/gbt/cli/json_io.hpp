#pragma once

#include "gbt/errors.hpp"
#include "gbt/exclusivity/ideal_outcome.hpp"
#include "gbt/quantum/density_belief.hpp"

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gbt::cli {

// Unreadable or malformed input files.
class InputError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

// Parse errors are reported as "<source>:<line>:<column>: <message>".
nlohmann::json parse_json_text(std::string_view text, const std::string& source);
nlohmann::json load_json_file(const std::string& path);

// A density matrix literal, or {"belief": literal}.
quantum::DensityBelief belief_from_json(const nlohmann::json& j);

// {"dim": d, "outcomes": [{"event": [...], "unitary"?: M, "kraus"?: [M...],
//  "reversal_kraus"?: [M...]}, ...]}. With "unitary" the reversal is U^dagger;
// with "kraus" the reversal defaults to the identity; with neither the
// outcome is principal.
std::vector<exclusivity::IdealOutcome> outcomes_from_json(const nlohmann::json& j);

}  // namespace gbt::cli
