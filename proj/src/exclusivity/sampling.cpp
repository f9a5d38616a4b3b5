#include "gbt/exclusivity/sampling.hpp"

#include "gbt/errors.hpp"
#include "gbt/exclusivity/filter.hpp"
#include "gbt/quantum/instrument.hpp"
#include "gbt/quantum/sampling.hpp"

#include <algorithm>

namespace gbt::exclusivity {

namespace {

// Random unitary acting separately on span(E) and on its complement.
ComplexMatrix block_unitary(const Event& e, Rng& rng) {
    const std::size_t d = e.space().size();
    ComplexMatrix out(d);
    for (const Event& part : {e, e.complement()}) {
        const auto idx = part.members();
        if (idx.empty()) continue;
        const ComplexMatrix u = quantum::random_unitary(idx.size(), rng);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < idx.size(); ++c) out.set(idx[r], idx[c], u.at(r, c));
        }
    }
    return out;
}

// Permutation matrix sending |from[i]> to |to[i]> and the remaining basis
// vectors to the remaining ones in increasing order.
ComplexMatrix permutation(const Event& from, const Event& to) {
    const std::size_t d = from.space().size();
    const auto f = from.members();
    const auto t = to.members();
    const auto fr = from.complement().members();
    const auto tr = to.complement().members();
    ComplexMatrix p(d);
    for (std::size_t i = 0; i < f.size(); ++i) p.set(t[i], f[i], 1.0);
    for (std::size_t i = 0; i < fr.size(); ++i) p.set(tr[i], fr[i], 1.0);
    return p;
}

Event random_event_of_size(SampleSpace space, std::size_t size, Rng& rng) {
    std::vector<std::size_t> all(space.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.index(0, i - 1)]);
    all.resize(size);
    return Event(space, std::span<const std::size_t>(all));
}

DensityBelief trial_belief(const std::vector<IdealOutcome>& family, std::size_t t, Rng& rng) {
    const std::size_t d = family.front().dim();
    if (t % 4 == 3) return DensityBelief::unchecked(quantum::random_density_on(family.front().effect(), rng));
    return t % 2 == 0 ? quantum::random_density(d, rng) : quantum::random_pure(d, rng);
}

}  // namespace

std::vector<IdealOutcome> random_exclusive_family(std::size_t dim, FamilyMode mode, Rng& rng) {
    if (dim < 1) throw StructuralError("random_exclusive_family: dimension must be >= 1");
    const SampleSpace space(dim);
    const std::size_t k = rng.index(1, dim);
    const Partition blocks = quantum::random_partition(space, rng, k);
    std::vector<std::size_t> order(blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(0, i - 1)]);

    const ComplexMatrix v = mode == FamilyMode::Dressed ? quantum::random_unitary(dim, rng) : ComplexMatrix::identity(dim);
    std::vector<IdealOutcome> family;
    family.reserve(k);
    for (std::size_t n = 0; n < k; ++n) {
        const Event& target = blocks[order[n]];
        const bool principal = mode == FamilyMode::Principal || (mode == FamilyMode::Mixed && rng.coin());
        if (principal) {
            family.push_back(IdealOutcome::principal(target));
            continue;
        }
        const Event e = random_event_of_size(space, target.count(), rng);
        const ComplexMatrix w = block_unitary(e, rng) * permutation(target, e) * v.adjoint();
        family.push_back(IdealOutcome::dressed(w, e));
    }
    return family;
}

TheoremReport sweep_exclusivity_bound(std::size_t dim, std::size_t trials, std::uint64_t seed, double tol) {
    ClaimReport matches = ClaimReport::start("filter_matches_direct", trials, tol);
    ClaimReport bound = ClaimReport::start("exclusivity_bound", trials, tol);
    ClaimReport normalized = ClaimReport::start("q_normalized", trials, 1e-10);
    ClaimReport exclusive = ClaimReport::start("families_pairwise_exclusive", trials, 0.5);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, "exclusivity_bound", t));
        const auto family = random_exclusive_family(dim, static_cast<FamilyMode>(t % 3), rng);
        const DensityBelief beta = trial_belief(family, t, rng);
        const Theorem2Report r = verify_theorem2(family, [&](std::size_t) { return beta; }, 1, tol);
        exclusive.observe(t, r.failing_pair ? 1.0 : 0.0, "family");
        if (r.failing_pair) continue;
        for (ClaimReport* c : {&matches, &bound, &normalized}) {
            const ClaimReport& inner = r.report.claim(c->claim);
            c->observe(t, inner.max_residual, inner.counterexample ? inner.counterexample->where : "");
        }
    }
    for (ClaimReport* c : {&exclusive, &matches, &bound, &normalized}) c->finish();
    return {"exclusivity_principle", {exclusive, matches, bound, normalized}};
}

TheoremReport sweep_same_effect(std::size_t dim, std::size_t trials, std::uint64_t seed, double tol) {
    if (dim < 2) throw StructuralError("sweep_same_effect: dimension must be >= 2");
    ClaimReport open = ClaimReport::start("complement_possible", trials, tol);
    ClaimReport null = ClaimReport::start("complement_null", trials, tol);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, "same_effect", t));
        std::vector<IdealOutcome> family;
        do {
            family = random_exclusive_family(dim, static_cast<FamilyMode>(t % 3), rng);
        } while (family.size() < 2);
        // Odd trials put the belief inside the first effect: p(Ebar_1 | A_1 b) = 0.
        const DensityBelief beta = t % 2 == 1
                                       ? DensityBelief::unchecked(quantum::random_density_on(family[0].effect(), rng))
                                       : quantum::random_density(dim, rng);
        const LemmaCheck c = verify_lemma_sameeffect(family[0], family[1], beta);
        (c.complement_null ? null : open).observe(t, c.residual, c.complement_null ? "p(E_2|A_2 b)" : "product form");
    }
    open.finish();
    null.finish();
    return {"same_effect_lemma", {open, null}};
}

}  // namespace gbt::exclusivity
