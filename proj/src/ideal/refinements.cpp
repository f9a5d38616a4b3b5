#include "gbt/ideal/refinements.hpp"

#include "gbt/errors.hpp"
#include "gbt/linalg/spectral.hpp"
#include "gbt/quantum/sampling.hpp"

#include <numeric>

namespace gbt::ideal {

namespace {

// Random split of `elements` into `parts` nonempty lists.
std::vector<std::vector<std::size_t>> random_groups(std::vector<std::size_t> elements, std::size_t parts, Rng& rng) {
    for (std::size_t i = elements.size(); i > 1; --i) std::swap(elements[i - 1], elements[rng.index(0, i - 1)]);
    std::vector<std::vector<std::size_t>> groups(parts);
    for (std::size_t k = 0; k < elements.size(); ++k) groups[k < parts ? k : rng.index(0, parts - 1)].push_back(elements[k]);
    return groups;
}

}  // namespace

RefinementWitness random_principal_refinement(const Partition& coarse, Rng& rng) {
    const SampleSpace space = coarse.space();
    const std::size_t d = space.size();
    std::vector<std::size_t> all(d);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const auto groups = random_groups(all, coarse.size(), rng);

    std::vector<Event> blocks;
    std::vector<std::size_t> grouping;
    std::vector<ComplexMatrix> ops;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        const Event target(space, std::span<const std::size_t>(groups[i]));
        for (ComplexMatrix& k : quantum::random_kraus_between(coarse[i], target, rng.index(1, 2), rng)) ops.push_back(std::move(k));
        for (const auto& piece : random_groups(groups[i], rng.index(1, groups[i].size()), rng)) {
            blocks.emplace_back(space, std::span<const std::size_t>(piece));
            grouping.push_back(i);
        }
    }
    return {Experiment{KrausChannel(std::move(ops)), Partition(space, std::move(blocks))}, std::move(grouping)};
}

RefinementWitness random_dressed_refinement(const ComplexMatrix& u, const Partition& coarse, Rng& rng) {
    RefinementWitness w = random_principal_refinement(coarse, rng);
    w.fine.action = w.fine.action.after(KrausChannel::unitary(u));
    return w;
}

InstrumentRefinement random_instrument_refinement(const QuantumInstrument& coarse, Rng& rng, std::size_t max_pieces) {
    if (max_pieces < 1) throw StructuralError("random_instrument_refinement: max_pieces must be >= 1");
    const std::size_t d = coarse.dim();
    std::vector<ComplexMatrix> effects;
    std::vector<std::size_t> grouping;
    for (std::size_t i = 0; i < coarse.outcomes(); ++i) {
        const ComplexMatrix a = linalg::hermitian_part(coarse.branch_adjoint(i, ComplexMatrix::identity(d)));
        const ComplexMatrix support = linalg::support_projector(a);
        const std::size_t pieces = rng.index(1, max_pieces);
        if (support.trace().real() < 0.5) {
            // A_i = 0: every piece is zero as well.
            for (std::size_t l = 0; l < pieces; ++l) {
                effects.emplace_back(d);
                grouping.push_back(i);
            }
            continue;
        }
        std::vector<ComplexMatrix> parts;
        ComplexMatrix sum(d);
        for (std::size_t l = 0; l < pieces; ++l) {
            parts.push_back(quantum::random_density_on(support, rng) * (0.1 + rng.uniform()));
            sum += parts.back();
        }
        const ComplexMatrix root = linalg::psd_sqrt(a);
        const ComplexMatrix inv = linalg::psd_inv_sqrt(sum);
        for (const ComplexMatrix& r : parts) {
            effects.push_back(linalg::hermitian_part(root * inv * r * inv * root));
            grouping.push_back(i);
        }
    }
    return {sqrt_instrument(effects), std::move(grouping)};
}

QuantumInstrument sqrt_instrument(const std::vector<ComplexMatrix>& effects, const ToleranceConfig& tol) {
    std::vector<QuantumInstrument::Branch> branches;
    branches.reserve(effects.size());
    for (const ComplexMatrix& m : effects) branches.push_back({linalg::psd_sqrt(m)});
    return QuantumInstrument(std::move(branches), tol);
}

}  // namespace gbt::ideal
