#pragma once

#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/linalg/tolerance.hpp"
#include "gbt/quantum/density_belief.hpp"
#include "gbt/scenarios/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace gbt::scenarios {

struct CliqueSum {
    std::vector<std::string> clique;
    double sum = 0.0;
};

struct WitnessReport {
    // Edges whose projectors are not orthogonal: the realization is rejected.
    std::vector<std::pair<std::string, std::string>> non_orthogonal;
    std::vector<CliqueSum> sums;
    double max_sum = 0.0;
    bool consistent = false;
    bool pass = false;
};

// Assigns a projector to every label, checks that adjacent labels get
// orthogonal projectors, and evaluates Tr[sum_{x in C} Q_x rho] on every
// maximal clique C. Throws StructuralError for missing labels or dimension
// mismatches and DomainError for non-projectors.
WitnessReport quantum_witness_check(const Scenario& s, const std::map<std::string, linalg::ComplexMatrix>& projectors,
                                    const quantum::DensityBelief& belief, const linalg::ToleranceConfig& tol = {});

nlohmann::json to_json(const WitnessReport& r);

}  // namespace gbt::scenarios
