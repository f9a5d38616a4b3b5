#include "gbt/ideal/experiment.hpp"

#include "gbt/errors.hpp"
#include "gbt/linalg/spectral.hpp"

#include <algorithm>
#include <string>

namespace gbt::ideal {

QuantumInstrument Experiment::instrument(const ToleranceConfig& tol) const {
    return quantum::instrument_of(action, partition, tol);
}

std::vector<ComplexMatrix> Experiment::effects() const {
    std::vector<ComplexMatrix> out;
    out.reserve(partition.size());
    for (const Event& block : partition.blocks()) out.push_back(action.adjoint(quantum::projector_of_event(block, dim())));
    return out;
}

std::vector<ComplexMatrix> instrument_effects(const QuantumInstrument& inst) {
    std::vector<ComplexMatrix> out;
    out.reserve(inst.outcomes());
    const ComplexMatrix id = ComplexMatrix::identity(inst.dim());
    for (std::size_t i = 0; i < inst.outcomes(); ++i) out.push_back(linalg::hermitian_part(inst.branch_adjoint(i, id)));
    return out;
}

void validate_grouping(const std::vector<std::size_t>& grouping, std::size_t fine_outcomes, std::size_t coarse_outcomes) {
    if (grouping.size() != fine_outcomes) {
        throw StructuralError("grouping has " + std::to_string(grouping.size()) + " entries for " +
                              std::to_string(fine_outcomes) + " fine outcomes");
    }
    for (std::size_t l = 0; l < grouping.size(); ++l) {
        if (grouping[l] >= coarse_outcomes) {
            throw StructuralError("grouping[" + std::to_string(l) + "] = " + std::to_string(grouping[l]) +
                                  " but the coarse experiment has " + std::to_string(coarse_outcomes) + " outcomes");
        }
    }
}

double refinement_defect(const InstrumentRefinement& fine, const QuantumInstrument& coarse) {
    if (fine.fine.dim() != coarse.dim()) throw StructuralError("refinement and coarse experiment differ in dimension");
    validate_grouping(fine.grouping, fine.fine.outcomes(), coarse.outcomes());
    const auto fine_effects = instrument_effects(fine.fine);
    auto sums = std::vector<ComplexMatrix>(coarse.outcomes(), ComplexMatrix(coarse.dim()));
    for (std::size_t l = 0; l < fine_effects.size(); ++l) sums[fine.grouping[l]] += fine_effects[l];
    const auto coarse_effects = instrument_effects(coarse);
    double defect = 0.0;
    for (std::size_t i = 0; i < coarse_effects.size(); ++i) defect = std::max(defect, max_abs_diff(sums[i], coarse_effects[i]));
    return defect;
}

bool is_refinement(const InstrumentRefinement& fine, const QuantumInstrument& coarse, const ToleranceConfig& tol) {
    return refinement_defect(fine, coarse) <= tol.eq_tol();
}

bool is_refinement(const RefinementWitness& fine, const Experiment& coarse, const ToleranceConfig& tol) {
    return is_refinement(as_instrument_refinement(fine, tol), coarse.instrument(tol), tol);
}

InstrumentRefinement as_instrument_refinement(const RefinementWitness& w, const ToleranceConfig& tol) {
    return {w.fine.instrument(tol), w.grouping};
}

}  // namespace gbt::ideal

namespace gbt::ideal {

KrausChannel invert_unitary_channel(const KrausChannel& channel, const ToleranceConfig& tol) {
    const auto u = channel.as_unitary(tol);
    if (!u) {
        throw DomainError("channel with " + std::to_string(channel.kraus_ops().size()) +
                          " Kraus operators is not unitary, so it has no inverse action");
    }
    KrausChannel inverse = KrausChannel::unitary(u->adjoint(), tol);
    if (max_abs_diff(u->adjoint() * *u, ComplexMatrix::identity(u->dim())) > tol.eq_tol()) {
        throw DomainError("U^dagger U differs from the identity");
    }
    return inverse;
}

}  // namespace gbt::ideal
