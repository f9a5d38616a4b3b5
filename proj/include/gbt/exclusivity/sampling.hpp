#pragma once

#include "gbt/core/reports.hpp"
#include "gbt/core/seeding.hpp"
#include "gbt/exclusivity/ideal_outcome.hpp"
#include "gbt/quantum/density_belief.hpp"

#include <cstdint>
#include <vector>

namespace gbt::exclusivity {

enum class FamilyMode {
    Principal,  // (I, E_n) with disjoint E_n
    Dressed,    // every outcome (W_n, E_n) with a random W_n
    Mixed,      // some principal, some dressed, effects still diagonal
};

// k outcomes (1 <= k <= d) with pairwise orthogonal projector effects.
// Dressed outcomes use W_n = D_n S_n V^dagger: V a random unitary shared by the
// family, S_n a permutation taking the target block to E_n and D_n a random
// unitary commuting with P_{E_n}, so that W_n^dagger P_{E_n} W_n = V P V^dagger.
std::vector<IdealOutcome> random_exclusive_family(std::size_t dim, FamilyMode mode, Rng& rng);

// Sweeps for the exclusivity theorem and the same-effect lemma over random
// families in dimension `dim`. Every fourth belief is supported inside the
// first outcome's effect so the zero-probability branch is exercised.
TheoremReport sweep_exclusivity_bound(std::size_t dim, std::size_t trials, std::uint64_t seed, double tol = 1e-9);
TheoremReport sweep_same_effect(std::size_t dim, std::size_t trials, std::uint64_t seed, double tol = 1e-10);

}  // namespace gbt::exclusivity
