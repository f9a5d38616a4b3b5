#pragma once

#include "gbt/core/reports.hpp"
#include "gbt/ideal/classify.hpp"
#include "gbt/ideal/experiment.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gbt::ideal {

using gbt::TheoremReport;

struct SweepConfig {
    std::size_t dim = 3;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    // Beliefs sampled per trial.
    std::size_t beliefs = 2;
};

// The identity action is ideal: for random refinements (C, F) of random
// principal experiments (I, E), sequential refinability holds with A' = I,
// and F_i C b = C E_i b whenever p(E_i|b) is nonzero.
// `partitions` fixes the coarse experiments (cycled); empty means random.
// `random_reversal` swaps A' = I for a random unitary (negative control).
TheoremReport verify_identity_ideal(const SweepConfig& cfg, const std::vector<Partition>& partitions = {},
                                    bool random_reversal = false);

// Unitary-dressed experiments (U, E) with refinements (C o U, F) and A' = U^dagger.
TheoremReport verify_reversible_corollary(const SweepConfig& cfg);

// Random Lueders instruments of projectors W P_{E_i} W^dagger in dimensions
// 2..cfg.dim: each must classify as projective in Lueders form and pass
// refinability (A' = I) against `refinements` random refinements.
TheoremReport verify_projective_refinable(const SweepConfig& cfg, std::size_t refinements);

// A non-projective instrument must classify as such and the sub-effect search
// must find a refinement with residual above `witness_floor` for every
// reversal candidate.
TheoremReport verify_nonprojective_witness(const QuantumInstrument& inst, const std::vector<KrausChannel>& reversals,
                                           const SweepConfig& cfg, double witness_floor);

}  // namespace gbt::ideal
