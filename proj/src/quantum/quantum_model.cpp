#include "gbt/quantum/quantum_model.hpp"

#include "gbt/errors.hpp"

#include <algorithm>
#include <string>

namespace gbt::quantum {

double born_probability(const DensityBelief& rho, const Event& event, const ToleranceConfig& tol) {
    if (event.space().size() != rho.dim()) {
        throw StructuralError("event over a sample space of size " + std::to_string(event.space().size()) +
                              " used with a belief of dimension " + std::to_string(rho.dim()));
    }
    // Diagonal projector: the trace is a sum of diagonal entries.
    double p = 0.0;
    const auto re = rho.matrix().real();
    const std::size_t d = rho.dim();
    for (std::size_t x : event.members()) p += re[x * d + x];
    if (p < -tol.eq_tol() || p > 1.0 + tol.eq_tol()) {
        throw DomainError("Born probability " + std::to_string(p) + " outside [0, 1] beyond tolerance");
    }
    return std::clamp(p, 0.0, 1.0);
}

DensityBelief luders_update(const DensityBelief& rho, const Event& event, const ToleranceConfig& tol) {
    const double p = born_probability(rho, event, tol);
    if (p <= kZeroProbability) {
        throw UndefinedUpdate("Lueders update for " + event.to_string() + " with p = " + std::to_string(p) +
                              "; the update map is only defined for events of nonzero probability");
    }
    const std::size_t d = rho.dim();
    const auto members = event.members();
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out(d);
    for (std::size_t r : members) {
        for (std::size_t c : members) out.set(r, c, m.at(r, c) / p);
    }
    return DensityBelief::unchecked(out);
}

DensityBelief apply_channel(const KrausChannel& channel, const DensityBelief& rho) {
    return DensityBelief::unchecked(channel.apply(rho.matrix()));
}

ComplexMatrix adjoint_effect(const KrausChannel& channel, const ComplexMatrix& o) { return channel.adjoint(o); }

QuantumModel::QuantumModel(std::size_t dim, ToleranceConfig tol) : dim_(dim), tol_(tol) {
    if (dim < 1 || dim > SampleSpace::kMaxSize) throw StructuralError("quantum model dimension must be in 1..64");
}

double QuantumModel::distance(const Belief& a, const Belief& b) const { return max_abs_diff(a.matrix(), b.matrix()); }

}  // namespace gbt::quantum
