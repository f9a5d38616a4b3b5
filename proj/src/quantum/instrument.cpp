#include "gbt/quantum/instrument.hpp"

#include "gbt/errors.hpp"
#include "gbt/linalg/spectral.hpp"

#include <string>

namespace gbt::quantum {

Effect::Effect(ComplexMatrix op, const ToleranceConfig& tol) : op_(std::move(op)) {
    if (!linalg::is_hermitian(op_, tol)) throw DomainError("effect is not Hermitian");
    const auto eig = linalg::eigh(op_);
    if (eig.values.front() < -tol.psd_tol() || eig.values.back() > 1.0 + tol.psd_tol()) {
        throw DomainError("effect eigenvalues leave [0, 1]: [" + std::to_string(eig.values.front()) + ", " +
                          std::to_string(eig.values.back()) + "]");
    }
}

QuantumInstrument::QuantumInstrument(std::vector<Branch> branches, const ToleranceConfig& tol)
    : branches_(std::move(branches)) {
    if (branches_.empty()) throw StructuralError("instrument needs at least one branch");
    if (branches_.front().empty()) throw StructuralError("instrument branch 0 has no Kraus operators");
    const std::size_t d = branches_.front().front().dim();
    if (d == 0) throw StructuralError("instrument dimension must be >= 1");
    ComplexMatrix total(d);
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (branches_[i].empty()) throw StructuralError("instrument branch " + std::to_string(i) + " has no Kraus operators");
        for (std::size_t j = 0; j < branches_[i].size(); ++j) {
            const ComplexMatrix& k = branches_[i][j];
            if (k.dim() != d) {
                throw StructuralError("branch " + std::to_string(i) + " operator " + std::to_string(j) + " has dimension " +
                                      std::to_string(k.dim()) + ", expected " + std::to_string(d));
            }
            if (!k.all_finite()) throw DomainError("branch " + std::to_string(i) + " has non-finite entries");
            total += k.adjoint() * k;
        }
    }
    const double residual = max_abs_diff(total, ComplexMatrix::identity(d));
    if (residual > tol.eq_tol()) {
        throw DomainError("instrument is not trace preserving in total: |sum K^dagger K - I|_max = " + std::to_string(residual));
    }
}

QuantumInstrument QuantumInstrument::luders(const std::vector<ComplexMatrix>& projectors, const ToleranceConfig& tol) {
    std::vector<Branch> branches;
    branches.reserve(projectors.size());
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        if (!linalg::is_projector(projectors[i], tol)) throw DomainError("operator " + std::to_string(i) + " is not a projector");
        branches.push_back({projectors[i]});
    }
    return QuantumInstrument(std::move(branches), tol);
}

ComplexMatrix QuantumInstrument::apply_branch(std::size_t i, const ComplexMatrix& rho) const {
    const Branch& branch = branches_.at(i);
    linalg::require_same_dim(branch.front(), rho, "QuantumInstrument::apply_branch");
    ComplexMatrix out(rho.dim());
    for (const ComplexMatrix& k : branch) out += sandwich(k, rho);
    return out;
}

double QuantumInstrument::branch_probability(std::size_t i, const ComplexMatrix& rho) const {
    return apply_branch(i, rho).trace().real();
}

ComplexMatrix QuantumInstrument::branch_adjoint(std::size_t i, const ComplexMatrix& o) const {
    const Branch& branch = branches_.at(i);
    linalg::require_same_dim(branch.front(), o, "QuantumInstrument::branch_adjoint");
    ComplexMatrix out(o.dim());
    for (const ComplexMatrix& k : branch) out += adjoint_sandwich(k, o);
    return out;
}

ComplexMatrix projector_of_event(const Event& event, std::size_t dim) {
    if (event.space().size() != dim) {
        throw StructuralError("event over a sample space of size " + std::to_string(event.space().size()) +
                              " used in dimension " + std::to_string(dim));
    }
    ComplexMatrix p(dim);
    for (std::size_t x : event.members()) p.set(x, x, 1.0);
    return p;
}

QuantumInstrument instrument_of(const KrausChannel& action, const Partition& partition, const ToleranceConfig& tol) {
    const std::size_t d = action.dim();
    std::vector<QuantumInstrument::Branch> branches;
    branches.reserve(partition.size());
    for (const Event& block : partition.blocks()) {
        const ComplexMatrix p = projector_of_event(block, d);
        QuantumInstrument::Branch branch;
        branch.reserve(action.kraus_ops().size());
        for (const ComplexMatrix& k : action.kraus_ops()) branch.push_back(p * k);
        branches.push_back(std::move(branch));
    }
    return QuantumInstrument(std::move(branches), tol);
}

std::vector<Effect> povm_of_instrument(const QuantumInstrument& inst, const ToleranceConfig& tol) {
    std::vector<Effect> effects;
    effects.reserve(inst.outcomes());
    const ComplexMatrix id = ComplexMatrix::identity(inst.dim());
    for (std::size_t i = 0; i < inst.outcomes(); ++i) effects.emplace_back(linalg::hermitian_part(inst.branch_adjoint(i, id)), tol);
    return effects;
}

}  // namespace gbt::quantum
