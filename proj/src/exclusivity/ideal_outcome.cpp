#include "gbt/exclusivity/ideal_outcome.hpp"

#include "gbt/errors.hpp"
#include "gbt/linalg/spectral.hpp"
#include "gbt/quantum/instrument.hpp"

namespace gbt::exclusivity {

IdealOutcome::IdealOutcome(KrausChannel action, Event event, KrausChannel reversal)
    : action_(std::move(action)), event_(std::move(event)), reversal_(std::move(reversal)) {
    if (action_.dim() != event_.space().size() || reversal_.dim() != action_.dim()) {
        throw StructuralError("ideal outcome: action, event and reversal must share the dimension");
    }
    effect_ = linalg::hermitian_part(action_.adjoint(quantum::projector_of_event(event_, action_.dim())));
}

IdealOutcome IdealOutcome::principal(const Event& event) {
    const std::size_t d = event.space().size();
    return IdealOutcome(KrausChannel::identity(d), event, KrausChannel::identity(d));
}

IdealOutcome IdealOutcome::dressed(const ComplexMatrix& u, const Event& event, const ToleranceConfig& tol) {
    return IdealOutcome(KrausChannel::unitary(u, tol), event, KrausChannel::unitary(u.adjoint(), tol));
}

bool IdealOutcome::has_projector_effect(const ToleranceConfig& tol) const { return linalg::is_projector(effect_, tol); }

}  // namespace gbt::exclusivity
