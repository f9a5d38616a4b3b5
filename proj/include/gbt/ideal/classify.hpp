#pragma once

#include "gbt/core/reports.hpp"
#include "gbt/ideal/experiment.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gbt::ideal {

struct Projective {
    std::vector<ComplexMatrix> projectors;
    // Largest gap between branch i and rho -> P_i rho P_i over the operator
    // basis |a><b|; luders_form when it is within eq_tol.
    double luders_defect = 0.0;
    bool luders_form = false;
};

struct NonProjective {
    std::size_t outcome = 0;
    std::string reason;
};

using Classification = std::variant<Projective, NonProjective>;

// Projective iff every POVM element is a projector and the elements are
// pairwise orthogonal; otherwise the first violated criterion is reported.
Classification classify_instrument(const QuantumInstrument& inst, const ToleranceConfig& tol = {});

double luders_defect(const QuantumInstrument& inst, const std::vector<ComplexMatrix>& projectors);

nlohmann::json to_json(const Classification& c);

// Qubit trine: K_k = sqrt(2/3) |psi_k><psi_k|, psi_k 120 degrees apart on the
// Bloch equator.
QuantumInstrument trine_instrument();

struct WitnessSearch {
    bool found = false;
    std::size_t outcome = 0;
    std::optional<InstrumentRefinement> refinement;
    // Smallest violation over the reversal candidates (sampled and exact).
    double residual = 0.0;
    double operator_defect = 0.0;
    std::size_t candidates = 0;
    ClaimReport report;
};

// Looks for a refinement that no candidate reversal can undo. For a
// non-projector effect A_i it picks B_i = s sigma with sigma a random state on
// supp(A_i) and s small enough that B_i <= A_i, and tries the refinement
// {B_i, A_i - B_i, A_j (j != i)}. A witness needs every candidate to show a
// sampled residual above 10 tol. Candidates other than those given are not
// explored, so "not found" proves nothing.
WitnessSearch search_refinability_witness(const QuantumInstrument& coarse, const std::vector<KrausChannel>& reversals,
                                          std::uint64_t seed, std::size_t attempts, std::size_t belief_trials, double tol);

nlohmann::json to_json(const WitnessSearch& w);

}  // namespace gbt::ideal
