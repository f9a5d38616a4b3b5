#include "gbt/ideal/refinability.hpp"

#include "gbt/core/seeding.hpp"
#include "gbt/errors.hpp"
#include "gbt/quantum/sampling.hpp"

#include <algorithm>

namespace gbt::ideal {

BeliefSampler random_beliefs(std::size_t dim, std::uint64_t seed) {
    return [dim, seed](std::size_t k) {
        Rng rng(derive_seed(seed, "beliefs", k));
        return k % 2 == 0 ? quantum::random_density(dim, rng) : quantum::random_pure(dim, rng);
    };
}

ClaimReport check_sequential_refinability(const Experiment& coarse, const KrausChannel& reversal,
                                          const RefinementWitness& fine, const BeliefSampler& beliefs,
                                          std::size_t trials, double tol, const ToleranceConfig& tolerances) {
    if (fine.fine.dim() != coarse.dim() || reversal.dim() != coarse.dim()) {
        throw StructuralError("check_sequential_refinability: dimension mismatch");
    }
    if (!is_refinement(fine, coarse, tolerances)) {
        ClaimReport r = ClaimReport::start("sequential_refinability", trials, tol);
        r.verdict = Verdict::Rejected;
        r.note = "not a refinement: grouped fine effects differ from the coarse effects by " +
                 std::to_string(refinement_defect(as_instrument_refinement(fine, tolerances), coarse.instrument(tolerances)));
        return r;
    }
    const quantum::QuantumModel model(coarse.dim(), tolerances);
    ClaimReport r = falsify_sequential_refinability(model, coarse.action, coarse.partition, reversal, fine.fine.action,
                                                    fine.fine.partition, fine.grouping, beliefs, trials, tol);
    r.note = "refinement checked exactly on effects; beliefs sampled";
    return r;
}

ClaimReport check_sequential_refinability(const QuantumInstrument& coarse, const KrausChannel& reversal,
                                          const InstrumentRefinement& fine, const BeliefSampler& beliefs,
                                          std::size_t trials, double tol, const ToleranceConfig& tolerances) {
    if (fine.fine.dim() != coarse.dim() || reversal.dim() != coarse.dim()) {
        throw StructuralError("check_sequential_refinability: dimension mismatch");
    }
    ClaimReport r = ClaimReport::start("sequential_refinability", trials, tol);
    const double defect = refinement_defect(fine, coarse);
    if (defect > tolerances.eq_tol()) {
        r.verdict = Verdict::Rejected;
        r.note = "not a refinement: grouped fine effects differ from the coarse effects by " + std::to_string(defect);
        return r;
    }
    r.note = "refinement checked exactly on effects; beliefs sampled";
    for (std::size_t k = 0; k < trials; ++k) {
        const ComplexMatrix rho = beliefs(k).matrix();
        for (std::size_t i = 0; i < coarse.outcomes(); ++i) {
            const ComplexMatrix branch = coarse.apply_branch(i, rho);
            if (branch.trace().real() <= kZeroProbability) continue;
            const ComplexMatrix disturbed = reversal.apply(branch);
            for (std::size_t l = 0; l < fine.fine.outcomes(); ++l) {
                if (fine.grouping[l] != i) continue;
                const double residual =
                    std::abs(fine.fine.branch_probability(l, rho) - fine.fine.branch_probability(l, disturbed));
                r.observe(k, residual, "outcome " + std::to_string(i) + ", fine outcome " + std::to_string(l));
            }
        }
    }
    r.finish();
    return r;
}

double refinability_operator_defect(const QuantumInstrument& coarse, const KrausChannel& reversal,
                                    const InstrumentRefinement& fine) {
    validate_grouping(fine.grouping, fine.fine.outcomes(), coarse.outcomes());
    const auto effects = instrument_effects(fine.fine);
    double defect = 0.0;
    for (std::size_t l = 0; l < effects.size(); ++l) {
        const ComplexMatrix pulled = coarse.branch_adjoint(fine.grouping[l], reversal.adjoint(effects[l]));
        defect = std::max(defect, max_abs_diff(pulled, effects[l]));
    }
    return defect;
}

}  // namespace gbt::ideal
