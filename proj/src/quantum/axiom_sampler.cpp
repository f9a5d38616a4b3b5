#include "gbt/quantum/axiom_sampler.hpp"

#include "gbt/errors.hpp"
#include "gbt/quantum/sampling.hpp"

#include <cmath>

namespace gbt::quantum {

KrausChannel retrodiction_channel(const Event& e, const Event& f, Rng& rng) {
    const std::size_t d = e.space().size();
    const Event not_f = f.complement();
    if (not_f.is_empty() && !e.is_total()) throw DomainError("retrodiction_channel: F is total but E is not");

    const ComplexMatrix p_e = projector_of_event(e, d);
    const KrausChannel v = random_channel(d, rng);
    std::vector<ComplexMatrix> ops;
    for (const ComplexMatrix& k : v.kraus_ops()) ops.push_back(k * p_e);

    if (!e.is_total()) {
        // Columns g_m of G / |G|_F with G supported on the complement of F:
        // sum_m g_m g_m^dagger is a density there, and g_m <x| for x outside E
        // completes the Kraus set.
        const ComplexMatrix g = projector_of_event(not_f, d) * ginibre(d, rng);
        double norm2 = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) norm2 += g.real()[i] * g.real()[i] + g.imag()[i] * g.imag()[i];
        const double scale = 1.0 / std::sqrt(norm2);
        for (std::size_t x : e.complement().members()) {
            for (std::size_t m = 0; m < d; ++m) {
                ComplexMatrix op(d);
                for (std::size_t r = 0; r < d; ++r) op.set(r, x, scale * g.at(r, m));
                ops.push_back(std::move(op));
            }
        }
    }
    return KrausChannel(std::move(ops));
}

std::optional<AxiomTrial<QuantumModel>> QuantumAxiomSampler::operator()(std::size_t k) const {
    Rng rng(derive_seed(seed_, "axioms", k));
    const SampleSpace space(dim_);
    Partition outer = random_partition(space, rng);
    Partition inner = random_partition(space, rng, std::min<std::size_t>(2, dim_));
    const std::size_t e_block = rng.index(0, outer.size() - 1);
    const std::size_t f_block = rng.index(0, inner.size() - 1);
    const Event& e = outer[e_block];
    const Event& f = inner[f_block];

    const bool constructed = k % 2 == 1;
    DensityBelief belief = constructed ? DensityBelief::unchecked(random_density_on(projector_of_event(e, dim_), rng))
                                       : random_density(dim_, rng);
    KrausChannel a = random_channel(dim_, rng);
    KrausChannel b = constructed && !f.is_total() ? retrodiction_channel(e, f, rng) : random_channel(dim_, rng);
    return AxiomTrial<QuantumModel>{std::move(belief), std::move(a), std::move(outer), std::move(b), std::move(inner),
                                    e_block, f_block};
}

}  // namespace gbt::quantum
