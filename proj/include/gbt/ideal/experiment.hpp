#pragma once

#include "gbt/core/event.hpp"
#include "gbt/quantum/instrument.hpp"
#include "gbt/quantum/kraus_channel.hpp"

#include <vector>

namespace gbt::ideal {

using linalg::ComplexMatrix;
using linalg::ToleranceConfig;
using quantum::KrausChannel;
using quantum::QuantumInstrument;

// Composite experiment: an action followed by a principal experiment.
struct Experiment {
    KrausChannel action;
    Partition partition;

    std::size_t dim() const { return action.dim(); }
    // Branch i = P_{E_i} A(.) P_{E_i}.
    QuantumInstrument instrument(const ToleranceConfig& tol = {}) const;
    // A^dagger(P_{E_i}) for every block.
    std::vector<ComplexMatrix> effects() const;
};

// A fine experiment plus the map from its blocks to coarse outcomes:
// grouping[l] = i means block F_l belongs to F_i = union of its group.
struct RefinementWitness {
    Experiment fine;
    std::vector<std::size_t> grouping;
};

// The same for arbitrary instruments (coarse outcomes need not come from a
// principal experiment, e.g. a trine POVM).
struct InstrumentRefinement {
    QuantumInstrument fine;
    std::vector<std::size_t> grouping;
};

std::vector<ComplexMatrix> instrument_effects(const QuantumInstrument& inst);

// Throws StructuralError if the grouping has the wrong length, points past
// the coarse outcomes, or the dimensions differ.
void validate_grouping(const std::vector<std::size_t>& grouping, std::size_t fine_outcomes, std::size_t coarse_outcomes);

// max_i |sum_{l in group i} B_l - A_i|_max over effect operators.
double refinement_defect(const InstrumentRefinement& fine, const QuantumInstrument& coarse);

bool is_refinement(const InstrumentRefinement& fine, const QuantumInstrument& coarse, const ToleranceConfig& tol = {});
bool is_refinement(const RefinementWitness& fine, const Experiment& coarse, const ToleranceConfig& tol = {});

InstrumentRefinement as_instrument_refinement(const RefinementWitness& w, const ToleranceConfig& tol = {});

}  // namespace gbt::ideal

namespace gbt::ideal {

// Kraus {U^dagger} for a unitary channel {U}; throws DomainError for any
// other channel (only unitary channels are reversible).
KrausChannel invert_unitary_channel(const KrausChannel& channel, const ToleranceConfig& tol = {});

}  // namespace gbt::ideal
