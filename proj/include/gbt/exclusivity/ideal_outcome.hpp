#pragma once

#include "gbt/core/event.hpp"
#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/linalg/tolerance.hpp"
#include "gbt/quantum/kraus_channel.hpp"

namespace gbt::exclusivity {

using linalg::ComplexMatrix;
using linalg::ToleranceConfig;
using quantum::KrausChannel;

// Outcome x = (A, E) of an ideal experiment: apply A, then observe E.
// Carries the reversing action A' used after the complement of E is seen,
// and caches the effect A^dagger(P_E).
class IdealOutcome {
public:
    IdealOutcome(KrausChannel action, Event event, KrausChannel reversal);

    // (I, E) with A' = I.
    static IdealOutcome principal(const Event& event);
    // (U, E) with A' = U^dagger.
    static IdealOutcome dressed(const ComplexMatrix& u, const Event& event, const ToleranceConfig& tol = {});

    const KrausChannel& action() const noexcept { return action_; }
    const Event& event() const noexcept { return event_; }
    const KrausChannel& reversal() const noexcept { return reversal_; }
    const ComplexMatrix& effect() const noexcept { return effect_; }
    std::size_t dim() const noexcept { return effect_.dim(); }

    bool has_projector_effect(const ToleranceConfig& tol = {}) const;

private:
    KrausChannel action_;
    Event event_;
    KrausChannel reversal_;
    ComplexMatrix effect_;
};

}  // namespace gbt::exclusivity
