#include "gbt/ideal/theorems.hpp"

#include "gbt/errors.hpp"
#include "gbt/ideal/refinability.hpp"
#include "gbt/ideal/refinements.hpp"
#include "gbt/quantum/quantum_model.hpp"
#include "gbt/quantum/sampling.hpp"

#include <algorithm>

namespace gbt::ideal {

namespace {

// Folds one per-trial report into a sweep-level claim.
void fold(ClaimReport& agg, std::size_t trial, const ClaimReport& r) {
    if (r.verdict == Verdict::Rejected) {
        agg.verdict = Verdict::Rejected;
        if (agg.note.empty()) agg.note = "trial " + std::to_string(trial) + ": " + r.note;
        return;
    }
    if (r.applicable == 0) return;
    agg.observe(trial, r.max_residual, r.counterexample ? r.counterexample->where : "");
}

void check_config(const SweepConfig& cfg) {
    if (cfg.dim < 1 || cfg.dim > 16) throw StructuralError("sweep dimension must be in 1..16");
    if (cfg.trials < 1) throw StructuralError("sweep needs at least one trial");
    if (!(cfg.tol > 0.0)) throw StructuralError("tolerance must be positive");
}

Event group_union(const RefinementWitness& w, std::size_t i) {
    Event u = Event::none(w.fine.partition.space());
    for (std::size_t l = 0; l < w.grouping.size(); ++l) {
        if (w.grouping[l] == i) u = u | w.fine.partition[l];
    }
    return u;
}

}  // namespace

TheoremReport verify_identity_ideal(const SweepConfig& cfg, const std::vector<Partition>& partitions, bool random_reversal) {
    check_config(cfg);
    const SampleSpace space(cfg.dim);
    for (const auto& p : partitions) {
        if (p.space() != space) throw StructuralError("verify_identity_ideal: partition over the wrong sample space");
    }
    const quantum::QuantumModel model(cfg.dim);
    ClaimReport refinement = ClaimReport::start("refinement_condition", cfg.trials, cfg.tol);
    ClaimReport refinability = ClaimReport::start("identity_refinability", cfg.trials, cfg.tol);
    ClaimReport lemma = ClaimReport::start("belief_identity", cfg.trials, cfg.tol);
    if (random_reversal) refinability.note = "negative control: A' is a random unitary instead of the identity";

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng(derive_seed(cfg.seed, "identity-ideal", t));
        const Partition coarse_partition =
            partitions.empty() ? quantum::random_partition(space, rng) : partitions[t % partitions.size()];
        const Experiment coarse{KrausChannel::identity(cfg.dim), coarse_partition};
        const RefinementWitness fine = random_principal_refinement(coarse_partition, rng);
        const KrausChannel reversal =
            random_reversal ? KrausChannel::unitary(quantum::random_unitary(cfg.dim, rng)) : KrausChannel::identity(cfg.dim);

        refinement.observe(t, refinement_defect(as_instrument_refinement(fine), coarse.instrument()), "effect sums");
        const BeliefSampler beliefs = random_beliefs(cfg.dim, derive_seed(cfg.seed, "identity-ideal-beliefs", t));
        fold(refinability, t, check_sequential_refinability(coarse, reversal, fine, beliefs, cfg.beliefs, cfg.tol));

        for (std::size_t k = 0; k < cfg.beliefs; ++k) {
            const DensityBelief beta = beliefs(k);
            const DensityBelief c_beta = model.act(fine.fine.action, beta);
            for (std::size_t i = 0; i < coarse_partition.size(); ++i) {
                if (model.prob(coarse_partition[i], beta) <= kZeroProbability) continue;
                const DensityBelief lhs = model.update(group_union(fine, i), c_beta);
                const DensityBelief rhs = model.act(fine.fine.action, model.update(coarse_partition[i], beta));
                lemma.observe(t, model.distance(lhs, rhs), "outcome " + std::to_string(i));
            }
        }
    }
    for (ClaimReport* c : {&refinement, &refinability, &lemma}) c->finish();
    return {"identity_is_ideal", {refinement, refinability, lemma}};
}

TheoremReport verify_reversible_corollary(const SweepConfig& cfg) {
    check_config(cfg);
    const SampleSpace space(cfg.dim);
    ClaimReport refinement = ClaimReport::start("refinement_condition", cfg.trials, cfg.tol);
    ClaimReport refinability = ClaimReport::start("reversible_refinability", cfg.trials, cfg.tol);
    ClaimReport inverse = ClaimReport::start("inverse_action", cfg.trials, cfg.tol);

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng(derive_seed(cfg.seed, "reversible", t));
        const ComplexMatrix u = quantum::random_unitary(cfg.dim, rng);
        const Partition partition = quantum::random_partition(space, rng);
        const Experiment coarse{KrausChannel::unitary(u), partition};
        const RefinementWitness fine = random_dressed_refinement(u, partition, rng);
        const KrausChannel reversal = invert_unitary_channel(coarse.action);

        refinement.observe(t, refinement_defect(as_instrument_refinement(fine), coarse.instrument()), "effect sums");
        const BeliefSampler beliefs = random_beliefs(cfg.dim, derive_seed(cfg.seed, "reversible-beliefs", t));
        fold(refinability, t, check_sequential_refinability(coarse, reversal, fine, beliefs, cfg.beliefs, cfg.tol));
        const ComplexMatrix rho = beliefs(0).matrix();
        inverse.observe(t, max_abs_diff(reversal.apply(coarse.action.apply(rho)), rho), "A' A rho");
    }
    for (ClaimReport* c : {&refinement, &refinability, &inverse}) c->finish();
    return {"reversible_action_corollary", {refinement, refinability, inverse}};
}

TheoremReport verify_projective_refinable(const SweepConfig& cfg, std::size_t refinements) {
    check_config(cfg);
    if (cfg.dim < 2) throw StructuralError("verify_projective_refinable: dimension must be >= 2");
    ClaimReport classified = ClaimReport::start("classified_projective", cfg.trials, 0.5);
    ClaimReport luders = ClaimReport::start("luders_form", cfg.trials, cfg.tol);
    ClaimReport refinability = ClaimReport::start("projective_refinability", cfg.trials * refinements, cfg.tol);
    ClaimReport exact = ClaimReport::start("projective_refinability_exact", cfg.trials * refinements, cfg.tol);

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng(derive_seed(cfg.seed, "projective", t));
        const std::size_t d = 2 + t % (cfg.dim - 1);
        const ComplexMatrix w = quantum::random_unitary(d, rng);
        const Partition partition = quantum::random_partition(SampleSpace(d), rng);
        std::vector<ComplexMatrix> projectors;
        for (const Event& block : partition.blocks()) {
            projectors.push_back(linalg::hermitian_part(w * quantum::projector_of_event(block, d) * w.adjoint()));
        }
        const QuantumInstrument inst = QuantumInstrument::luders(projectors);
        const Classification c = classify_instrument(inst);
        const auto* p = std::get_if<Projective>(&c);
        classified.observe(t, p ? 0.0 : 1.0, p ? "" : std::get<NonProjective>(c).reason);
        if (p) luders.observe(t, p->luders_defect, "branch vs P rho P");

        const KrausChannel reversal = KrausChannel::identity(d);
        for (std::size_t r = 0; r < refinements; ++r) {
            const std::size_t index = t * refinements + r;
            Rng fine_rng(derive_seed(cfg.seed, "projective-refinement", index));
            const InstrumentRefinement fine = random_instrument_refinement(inst, fine_rng);
            const BeliefSampler beliefs = random_beliefs(d, derive_seed(cfg.seed, "projective-beliefs", index));
            fold(refinability, index, check_sequential_refinability(inst, reversal, fine, beliefs, cfg.beliefs, cfg.tol));
            exact.observe(index, refinability_operator_defect(inst, reversal, fine), "effects");
        }
    }
    for (ClaimReport* c : {&classified, &luders, &refinability, &exact}) c->finish();
    return {"projective_implies_ideal", {classified, luders, refinability, exact}};
}

TheoremReport verify_nonprojective_witness(const QuantumInstrument& inst, const std::vector<KrausChannel>& reversals,
                                           const SweepConfig& cfg, double witness_floor) {
    check_config(cfg);
    ClaimReport classified = ClaimReport::start("classified_non_projective", 1, 0.5);
    const Classification c = classify_instrument(inst);
    const bool non_projective = std::holds_alternative<NonProjective>(c);
    classified.observe(0, non_projective ? 0.0 : 1.0, non_projective ? "" : "classified projective");
    if (non_projective) classified.note = std::get<NonProjective>(c).reason;
    classified.finish();

    const WitnessSearch search = search_refinability_witness(inst, reversals, cfg.seed, cfg.trials, 8, cfg.tol);
    ClaimReport witness = ClaimReport::start("refinability_witness", cfg.trials, witness_floor);
    witness.applicable = search.report.applicable;
    witness.max_residual = search.residual;
    witness.note = "smallest sampled residual over the reversal candidates must exceed tol; operator defect " +
                   std::to_string(search.operator_defect);
    witness.verdict = search.found && search.residual > witness_floor ? Verdict::Pass : Verdict::Fail;
    if (search.found) witness.counterexample = Counterexample{0, "outcome " + std::to_string(search.outcome), search.residual};
    return {"non_projective_not_ideal", {classified, witness}};
}

}  // namespace gbt::ideal
