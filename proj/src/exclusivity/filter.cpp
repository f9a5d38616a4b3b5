#include "gbt/exclusivity/filter.hpp"

#include "gbt/errors.hpp"
#include "gbt/quantum/quantum_model.hpp"

#include <algorithm>
#include <cmath>

namespace gbt::exclusivity {

FilterResult run_filter_procedure(std::span<const IdealOutcome> outcomes, const DensityBelief& belief, double tol,
                                  const ToleranceConfig& tolerances) {
    const PairwiseCheck check = is_pairwise_exclusive(outcomes, tolerances);
    if (!check.exclusive) {
        throw DomainError("filter procedure needs pairwise exclusive outcomes; outcomes " +
                          std::to_string(check.failing_pair->first) + " and " +
                          std::to_string(check.failing_pair->second) + " are not");
    }
    const std::size_t d = belief.dim();
    const quantum::QuantumModel model(d, tolerances);
    FilterResult r;
    DensityBelief current = belief;
    double prefix = 1.0;
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
        const IdealOutcome& x = outcomes[j];
        if (x.dim() != d) throw StructuralError("filter procedure: outcome and belief dimensions differ");
        const DensityBelief acted = model.act(x.action(), current);
        const double p = model.prob(x.event(), acted);
        r.q.push_back(prefix * p);
        const Event rest = x.event().complement();
        const double p_rest = model.prob(rest, acted);
        prefix *= p_rest;
        if (p_rest <= kZeroProbability) {
            r.arbitrary_rounds.push_back(j);
            current = DensityBelief::maximally_mixed(d);
        } else {
            current = model.act(x.reversal(), model.update(rest, acted));
        }
    }
    r.q.push_back(prefix);

    for (std::size_t s = 0; s < outcomes.size(); ++s) {
        const double p = model.prob(outcomes[s].event(), model.act(outcomes[s].action(), belief));
        r.direct.push_back(p);
        r.direct_sum += p;
        r.per_outcome_residual.push_back(std::abs(r.q[s] - p));
    }
    for (double v : r.q) r.q_total += v;
    const double worst = r.per_outcome_residual.empty()
                             ? 0.0
                             : *std::max_element(r.per_outcome_residual.begin(), r.per_outcome_residual.end());
    const bool nonnegative = std::all_of(r.q.begin(), r.q.end(), [](double v) { return v >= 0.0; });
    r.pass = worst <= tol && r.direct_sum <= 1.0 + tol && std::abs(r.q_total - 1.0) <= 1e-10 && nonnegative;
    return r;
}

nlohmann::json to_json(const FilterResult& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (std::size_t s = 0; s < r.direct.size(); ++s) {
        checks.push_back({{"s", s + 1}, {"q", r.q[s]}, {"direct", r.direct[s]}, {"residual", r.per_outcome_residual[s]}});
    }
    return {{"outcomes", r.direct.size()},
            {"q", r.q},
            {"per_outcome_check", std::move(checks)},
            {"sum", r.direct_sum},
            {"q_total", r.q_total},
            {"arbitrary_rounds", r.arbitrary_rounds},
            {"pass", r.pass}};
}

Theorem2Report verify_theorem2(std::span<const IdealOutcome> outcomes, const BeliefSource& beliefs, std::size_t trials,
                               double tol) {
    Theorem2Report out;
    out.report.theorem = "exclusivity_principle";
    ClaimReport exclusive = ClaimReport::start("pairwise_exclusive", 1, 0.5);
    ClaimReport matches = ClaimReport::start("filter_matches_direct", trials, tol);
    ClaimReport bound = ClaimReport::start("exclusivity_bound", trials, tol);
    ClaimReport normalized = ClaimReport::start("q_normalized", trials, 1e-10);

    const PairwiseCheck check = is_pairwise_exclusive(outcomes);
    if (!check.exclusive) {
        out.failing_pair = check.failing_pair;
        exclusive.verdict = Verdict::Rejected;
        exclusive.note = "outcomes " + std::to_string(check.failing_pair->first) + " and " +
                         std::to_string(check.failing_pair->second) + " are not mutually exclusive";
        // The raw sum is still reported so the violation is visible.
        for (std::size_t k = 0; k < trials; ++k) {
            const double sum = outcome_sum(outcomes, beliefs(k));
            out.max_sum = std::max(out.max_sum, sum);
            bound.observe(k, std::max(0.0, sum - 1.0), "sum of probabilities");
        }
        bound.finish();
        out.report.claims = {exclusive, bound};
        return out;
    }
    exclusive.observe(0, 0.0, "");
    exclusive.finish();

    for (std::size_t k = 0; k < trials; ++k) {
        const FilterResult r = run_filter_procedure(outcomes, beliefs(k), tol);
        out.max_sum = std::max(out.max_sum, r.direct_sum);
        for (std::size_t s = 0; s < r.per_outcome_residual.size(); ++s) {
            matches.observe(k, r.per_outcome_residual[s], "s = " + std::to_string(s + 1));
        }
        bound.observe(k, std::max(0.0, r.direct_sum - 1.0), "sum of probabilities");
        double negative = 0.0;
        for (double v : r.q) negative = std::max(negative, -v);
        normalized.observe(k, std::max(std::abs(r.q_total - 1.0), negative), "sum of q");
    }
    for (ClaimReport* c : {&matches, &bound, &normalized}) c->finish();
    out.report.claims = {exclusive, matches, bound, normalized};
    return out;
}

LemmaCheck verify_lemma_sameeffect(const IdealOutcome& x1, const IdealOutcome& x2, const DensityBelief& belief,
                                   const ToleranceConfig& tol) {
    if (!are_mutually_exclusive(x1, x2, tol)) throw DomainError("verify_lemma_sameeffect: outcomes are not mutually exclusive");
    const quantum::QuantumModel model(belief.dim(), tol);
    const DensityBelief acted = model.act(x1.action(), belief);
    const Event rest = x1.event().complement();
    const double p_rest = model.prob(rest, acted);
    const double direct = model.prob(x2.event(), model.act(x2.action(), belief));
    LemmaCheck out;
    if (p_rest <= kZeroProbability) {
        out.complement_null = true;
        out.residual = direct;
        return out;
    }
    const DensityBelief after = model.act(x1.reversal(), model.update(rest, acted));
    out.residual = std::abs(model.prob(x2.event(), model.act(x2.action(), after)) * p_rest - direct);
    return out;
}

}  // namespace gbt::exclusivity
