#pragma once

#include "gbt/core/event.hpp"
#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/linalg/tolerance.hpp"
#include "gbt/quantum/kraus_channel.hpp"

#include <vector>

namespace gbt::quantum {

// A POVM element 0 <= op <= I.
class Effect {
public:
    explicit Effect(ComplexMatrix op, const ToleranceConfig& tol = {});
    const ComplexMatrix& op() const noexcept { return op_; }

private:
    ComplexMatrix op_;
};

// Outcome-indexed CP trace-non-increasing maps whose sum is trace preserving.
// Branch i acts as rho -> sum_j K_ij rho K_ij^dagger.
class QuantumInstrument {
public:
    using Branch = std::vector<ComplexMatrix>;

    explicit QuantumInstrument(std::vector<Branch> branches, const ToleranceConfig& tol = {});

    // Branch i = {P_i}: the Lueders instrument of a projective measurement.
    static QuantumInstrument luders(const std::vector<ComplexMatrix>& projectors, const ToleranceConfig& tol = {});

    std::size_t dim() const noexcept { return branches_.front().front().dim(); }
    std::size_t outcomes() const noexcept { return branches_.size(); }
    const std::vector<Branch>& branches() const noexcept { return branches_; }

    // Unnormalized post-measurement operator of branch i.
    ComplexMatrix apply_branch(std::size_t i, const ComplexMatrix& rho) const;
    // Tr[A_i(rho)]
    double branch_probability(std::size_t i, const ComplexMatrix& rho) const;
    // A_i^dagger(O)
    ComplexMatrix branch_adjoint(std::size_t i, const ComplexMatrix& o) const;

private:
    std::vector<Branch> branches_;
};

// Diagonal 0/1 projector onto span{|j> : j in E}. Throws StructuralError if
// the event's sample space differs from d.
ComplexMatrix projector_of_event(const Event& event, std::size_t dim);

// Branch i = P_{E_i} A(.) P_{E_i}, Kraus ops {P_{E_i} K_j}.
QuantumInstrument instrument_of(const KrausChannel& action, const Partition& partition, const ToleranceConfig& tol = {});

// A_i = A_i^dagger(I) for every branch.
std::vector<Effect> povm_of_instrument(const QuantumInstrument& inst, const ToleranceConfig& tol = {});

}  // namespace gbt::quantum
