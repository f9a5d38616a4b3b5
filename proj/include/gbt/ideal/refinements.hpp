#pragma once

#include "gbt/core/event.hpp"
#include "gbt/core/seeding.hpp"
#include "gbt/ideal/experiment.hpp"

namespace gbt::ideal {

// Random refinement (C, F) of the principal experiment (I, E).
// Each E_i is sent by C into its own group G_i of sample points (the G_i
// partition the space); the fine blocks then split every G_i at random.
// Hence C^dagger(P_{G_i}) = P_{E_i}, which is the refinement condition.
RefinementWitness random_principal_refinement(const Partition& coarse, Rng& rng);

// Refinement of a unitary-dressed experiment (U, E): (C o U, F) with (C, F)
// a random refinement of (I, E).
RefinementWitness random_dressed_refinement(const ComplexMatrix& u, const Partition& coarse, Rng& rng);

// Random refinement of any instrument: every effect A_i is split into
// 1..max_pieces effects A_i^{1/2} S^{-1/2} R_l S^{-1/2} A_i^{1/2}, with R_l
// random PSD on supp(A_i) and S = sum_l R_l.
InstrumentRefinement random_instrument_refinement(const QuantumInstrument& coarse, Rng& rng, std::size_t max_pieces = 3);

// Instrument realizing the given effects with Kraus operators sqrt(M_l).
QuantumInstrument sqrt_instrument(const std::vector<ComplexMatrix>& effects, const ToleranceConfig& tol = {});

}  // namespace gbt::ideal
