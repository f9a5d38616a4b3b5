#include "gbt/exclusivity/exclusivity.hpp"

#include "gbt/errors.hpp"

#include <string>

namespace gbt::exclusivity {

namespace {

void require_projector(const IdealOutcome& x, const ToleranceConfig& tol) {
    if (!x.has_projector_effect(tol)) {
        throw DomainError("outcome " + x.event().to_string() +
                          " has a non-projector effect; exclusivity is only defined for ideal outcomes");
    }
}

}  // namespace

bool are_equivalent(const IdealOutcome& x, const IdealOutcome& y, const ToleranceConfig& tol) {
    linalg::require_same_dim(x.effect(), y.effect(), "are_equivalent");
    return max_abs_diff(x.effect(), y.effect()) <= tol.eq_tol();
}

bool are_mutually_exclusive(const IdealOutcome& x, const IdealOutcome& y, const ToleranceConfig& tol) {
    linalg::require_same_dim(x.effect(), y.effect(), "are_mutually_exclusive");
    require_projector(x, tol);
    require_projector(y, tol);
    return max_abs(x.effect() * y.effect()) <= tol.eq_tol();
}

PairwiseCheck is_pairwise_exclusive(std::span<const IdealOutcome> outcomes, const ToleranceConfig& tol) {
    PairwiseCheck out;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
            if (!are_mutually_exclusive(outcomes[i], outcomes[j], tol)) {
                out.exclusive = false;
                out.failing_pair = std::pair{i, j};
                out.overlap = max_abs(outcomes[i].effect() * outcomes[j].effect());
                return out;
            }
        }
    }
    for (const auto& x : outcomes) require_projector(x, tol);
    return out;
}

double outcome_sum(std::span<const IdealOutcome> outcomes, const quantum::DensityBelief& belief) {
    double sum = 0.0;
    for (const auto& x : outcomes) {
        linalg::require_same_dim(x.effect(), belief.matrix(), "outcome_sum");
        sum += trace_product(x.effect(), belief.matrix()).real();
    }
    return sum;
}

double exclusivity_sum(std::span<const IdealOutcome> outcomes, const quantum::DensityBelief& belief,
                       const ToleranceConfig& tol) {
    const PairwiseCheck check = is_pairwise_exclusive(outcomes, tol);
    if (!check.exclusive) {
        throw DomainError("outcomes " + std::to_string(check.failing_pair->first) + " and " +
                          std::to_string(check.failing_pair->second) + " are not mutually exclusive");
    }
    return outcome_sum(outcomes, belief);
}

}  // namespace gbt::exclusivity
