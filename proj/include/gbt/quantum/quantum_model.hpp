#pragma once

#include "gbt/core/event.hpp"
#include "gbt/core/theory_model.hpp"
#include "gbt/quantum/density_belief.hpp"
#include "gbt/quantum/instrument.hpp"
#include "gbt/quantum/kraus_channel.hpp"

namespace gbt::quantum {

// p(E|rho) = Tr(P_E rho), clamped to [0,1] once the overshoot is within eq_tol.
double born_probability(const DensityBelief& rho, const Event& event, const ToleranceConfig& tol = {});

// P_E rho P_E / Tr(P_E rho). Throws UndefinedUpdate when the probability is
// at or below kZeroProbability.
DensityBelief luders_update(const DensityBelief& rho, const Event& event, const ToleranceConfig& tol = {});

DensityBelief apply_channel(const KrausChannel& channel, const DensityBelief& rho);
// A^dagger(O) = sum_j K_j^dagger O K_j
ComplexMatrix adjoint_effect(const KrausChannel& channel, const ComplexMatrix& o);

// Density-matrix beliefs, diagonal principal experiments, Kraus actions.
class QuantumModel {
public:
    using Belief = DensityBelief;
    using Action = KrausChannel;

    explicit QuantumModel(std::size_t dim, ToleranceConfig tol = {});

    std::size_t dim() const noexcept { return dim_; }
    const ToleranceConfig& tolerance() const noexcept { return tol_; }

    SampleSpace sample_space() const { return SampleSpace(dim_); }
    double prob(const Event& e, const Belief& b) const { return born_probability(b, e, tol_); }
    Belief update(const Event& e, const Belief& b) const { return luders_update(b, e, tol_); }
    Belief act(const Action& a, const Belief& b) const { return apply_channel(a, b); }
    Action compose(const Action& a, const Action& b) const { return a.after(b); }
    Action identity_action() const { return KrausChannel::identity(dim_); }
    // Beliefs are equal when their matrices are (entrywise max-norm).
    double distance(const Belief& a, const Belief& b) const;

private:
    std::size_t dim_;
    ToleranceConfig tol_;
};

static_assert(TheoryModel<QuantumModel>);

}  // namespace gbt::quantum
