#pragma once

#include "gbt/core/reports.hpp"
#include "gbt/core/theory_model.hpp"
#include "gbt/ideal/experiment.hpp"
#include "gbt/quantum/density_belief.hpp"
#include "gbt/quantum/quantum_model.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gbt::ideal {

using quantum::DensityBelief;

using BeliefSampler = std::function<DensityBelief(std::size_t)>;

// Belief k: a random mixed state for even k, a random pure state for odd k,
// drawn from derive_seed(seed, "beliefs", k).
BeliefSampler random_beliefs(std::size_t dim, std::uint64_t seed);

inline constexpr const char* kFalsifierNote =
    "sampled falsifier: beliefs and refinements are sampled, so a pass does not cover every refinement";

// Generic form for any model: samples beliefs and checks
//   p(F_l | B b) = p(F_l | B A' E_i A b) p(E_i | A b)   for l in group i
// whenever p(E_i | A b) is nonzero. The refinement condition itself can only
// be sampled here; if a sampled belief breaks it the report is Rejected.
template <TheoryModel M, class Beliefs>
ClaimReport falsify_sequential_refinability(const M& model, const typename M::Action& a, const Partition& coarse,
                                            const typename M::Action& reversal, const typename M::Action& b,
                                            const Partition& fine, const std::vector<std::size_t>& grouping,
                                            Beliefs&& beliefs, std::size_t trials, double tol) {
    validate_grouping(grouping, fine.size(), coarse.size());
    ClaimReport report = ClaimReport::start("sequential_refinability", trials, tol);
    report.note = kFalsifierNote;
    for (std::size_t k = 0; k < trials; ++k) {
        const typename M::Belief beta = beliefs(k);
        const auto after_a = model.act(a, beta);
        const auto after_b = model.act(b, beta);

        std::vector<double> group_sums(coarse.size(), 0.0);
        for (std::size_t l = 0; l < fine.size(); ++l) group_sums[grouping[l]] += model.prob(fine[l], after_b);
        for (std::size_t i = 0; i < coarse.size(); ++i) {
            if (std::abs(group_sums[i] - model.prob(coarse[i], after_a)) > tol) {
                report.verdict = Verdict::Rejected;
                report.note = "not a refinement: grouped probabilities differ from the coarse ones at trial " +
                              std::to_string(k) + ", outcome " + std::to_string(i);
                return report;
            }
        }

        for (std::size_t i = 0; i < coarse.size(); ++i) {
            const double p_e = model.prob(coarse[i], after_a);
            if (p_e <= kZeroProbability) continue;
            const auto disturbed = model.act(b, model.act(reversal, model.update(coarse[i], after_a)));
            for (std::size_t l = 0; l < fine.size(); ++l) {
                if (grouping[l] != i) continue;
                const double residual = std::abs(model.prob(fine[l], after_b) - model.prob(fine[l], disturbed) * p_e);
                report.observe(k, residual, "outcome " + std::to_string(i) + ", fine block " + std::to_string(l));
            }
        }
    }
    report.finish();
    return report;
}

// Quantum experiment form: the refinement condition is decided exactly from
// effect operators first (Rejected if it fails), then beliefs are sampled.
ClaimReport check_sequential_refinability(const Experiment& coarse, const KrausChannel& reversal,
                                          const RefinementWitness& fine, const BeliefSampler& beliefs,
                                          std::size_t trials, double tol, const ToleranceConfig& tolerances = {});

// Instrument form: coarse branches A_i, fine branches B_l, reversal A'.
// Residual per belief: |Tr B_l(rho) - Tr B_l(A'(A_i(rho)))|.
ClaimReport check_sequential_refinability(const QuantumInstrument& coarse, const KrausChannel& reversal,
                                          const InstrumentRefinement& fine, const BeliefSampler& beliefs,
                                          std::size_t trials, double tol, const ToleranceConfig& tolerances = {});

// Belief-free form of the same condition: since densities span the Hermitian
// matrices, it holds for every belief iff M_l = A_i^dagger(A'^dagger(M_l))
// for every fine effect M_l in group i. Returns the largest entrywise gap.
double refinability_operator_defect(const QuantumInstrument& coarse, const KrausChannel& reversal,
                                    const InstrumentRefinement& fine);

}  // namespace gbt::ideal
