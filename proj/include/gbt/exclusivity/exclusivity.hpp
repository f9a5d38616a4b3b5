#pragma once

#include "gbt/exclusivity/ideal_outcome.hpp"
#include "gbt/quantum/density_belief.hpp"

#include <optional>
#include <span>
#include <utility>

namespace gbt::exclusivity {

// Same probability for every belief. Densities span the Hermitian matrices,
// so this is equality of effect operators.
bool are_equivalent(const IdealOutcome& x, const IdealOutcome& y, const ToleranceConfig& tol = {});

// Orthogonal projector effects Q, Q' are two outcomes of the single
// projective experiment {Q, Q', I - Q - Q'}; conversely distinct outcomes of
// one ideal experiment have orthogonal effects. Throws DomainError when an
// effect is not a projector.
bool are_mutually_exclusive(const IdealOutcome& x, const IdealOutcome& y, const ToleranceConfig& tol = {});

struct PairwiseCheck {
    bool exclusive = true;
    // First pair (i < j) that is not mutually exclusive.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    double overlap = 0.0;
};

PairwiseCheck is_pairwise_exclusive(std::span<const IdealOutcome> outcomes, const ToleranceConfig& tol = {});

// sum_n Tr[effect_n rho] with no exclusivity check.
double outcome_sum(std::span<const IdealOutcome> outcomes, const quantum::DensityBelief& belief);

// Same, after checking pairwise exclusivity (DomainError otherwise).
double exclusivity_sum(std::span<const IdealOutcome> outcomes, const quantum::DensityBelief& belief,
                       const ToleranceConfig& tol = {});

}  // namespace gbt::exclusivity
