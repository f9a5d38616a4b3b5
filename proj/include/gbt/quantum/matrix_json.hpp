#pragma once

#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/quantum/instrument.hpp"

#include <json.hpp>

namespace gbt::quantum {

// Matrix literal: {"dim": d, "re": [[...]], "im": [[...]]}; "im" may be omitted.
// Shape problems throw StructuralError naming the offending field.
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& where = "matrix");
nlohmann::json matrix_to_json(const ComplexMatrix& m);

// {"branches": [[matrix, ...], ...]}
QuantumInstrument instrument_from_json(const nlohmann::json& j, const ToleranceConfig& tol = {});
nlohmann::json instrument_to_json(const QuantumInstrument& inst);

}  // namespace gbt::quantum
