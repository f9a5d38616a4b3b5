#pragma once

#include "gbt/core/event.hpp"
#include "gbt/core/reports.hpp"
#include "gbt/core/sequential.hpp"
#include "gbt/core/theory_model.hpp"
#include "gbt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gbt {

// One sampled situation for the axiom checkers.
//   conditional probability: (belief, e, f)
//   forward consistency:     (belief, e), applicable when p(e|belief) = 1
//   backward consistency:    sequential experiment (a, outer, b, inner) with
//                            e = outer[e_block], f = inner[f_block]
template <TheoryModel M>
struct AxiomTrial {
    typename M::Belief belief;
    typename M::Action a;
    Partition outer;
    typename M::Action b;
    Partition inner;
    std::size_t e_block = 0;
    std::size_t f_block = 0;

    const Event& e() const { return outer[e_block]; }
    const Event& f() const { return inner[f_block]; }
};

// Callable returning trial k, or nullopt once the sampler is exhausted.
template <class S, class M>
concept AxiomSampler = TheoryModel<M> && requires(S& s, std::size_t k) {
    { s(k) } -> std::same_as<std::optional<AxiomTrial<M>>>;
};

struct AxiomTolerances {
    double conditional = 1e-9;
    double forward = 1e-9;
    double backward = 1e-8;

    static AxiomTolerances uniform(double tol) { return {tol, tol, tol}; }
};

struct AxiomResult {
    std::string axiom;
    std::size_t trials = 0;
    std::size_t applicable = 0;
    double max_residual = 0.0;
    double tol = 0.0;

    bool inconclusive() const noexcept { return applicable == 0; }
    bool pass() const noexcept { return applicable > 0 && max_residual <= tol; }
};

struct AxiomReport {
    AxiomResult conditional;      // rule of conditional probabilities
    AxiomResult forward;          // forward consistency
    AxiomResult backward;         // backward consistency, hypotheses as stated
    AxiomResult backward_strong;  // same conclusion assuming only P(E|F) = 1

    std::vector<const AxiomResult*> all() const { return {&conditional, &forward, &backward, &backward_strong}; }
    bool pass() const;
    bool any_inconclusive() const;
};

nlohmann::json to_json(const AxiomResult& r);
nlohmann::json to_json(const AxiomReport& r);

template <TheoryModel M, AxiomSampler<M> Sampler>
AxiomReport check_axioms(const M& model, Sampler&& sampler, std::size_t trials, const AxiomTolerances& tol = {}) {
    AxiomReport report;
    report.conditional = {"conditional_probability", 0, 0, 0.0, tol.conditional};
    report.forward = {"forward_consistency", 0, 0, 0.0, tol.forward};
    report.backward = {"backward_consistency", 0, 0, 0.0, tol.backward};
    report.backward_strong = {"backward_consistency_strong", 0, 0, 0.0, tol.backward};

    const auto record = [](AxiomResult& r, double residual) {
        ++r.applicable;
        // NaN must not pass silently.
        r.max_residual = std::isnan(residual) ? residual : std::max(r.max_residual, residual);
    };

    for (std::size_t k = 0; k < trials; ++k) {
        std::optional<AxiomTrial<M>> trial = sampler(k);
        if (!trial) break;
        for (AxiomResult* r : {&report.conditional, &report.forward, &report.backward, &report.backward_strong}) ++r->trials;

        const auto& beta = trial->belief;
        const Event& e = trial->e();
        const Event& f = trial->f();

        const double p_e = model.prob(e, beta);
        if (p_e > kZeroProbability) {
            const auto updated = model.update(e, beta);
            const double lhs_f = model.prob(f, updated);
            const double rhs_f = model.prob(e & f, beta) / p_e;
            // F = E gives p(E|E b) = 1.
            const double self = std::abs(model.prob(e, updated) - 1.0);
            record(report.conditional, std::max(std::abs(lhs_f - rhs_f), self));
        }

        if (p_e >= 1.0 - kCertaintyTol) {
            record(report.forward, model.distance(model.update(e, beta), beta));
        }

        const JointTable table = joint_distribution(model, beta, trial->a, trial->outer, trial->b, trial->inner);
        const RetrodictionReport retro = retrodiction_report(table, trial->e_block, trial->f_block, tol.conditional);
        const bool certain_retrodiction =
            retro.conditional && std::abs(*retro.conditional - 1.0) <= tol.conditional && retro.direct_f > kZeroProbability;
        if (certain_retrodiction) {
            const std::vector<HistoryStep<M>> with_e{trial->a, e, trial->b, f};
            const std::vector<HistoryStep<M>> without_e{trial->a, trial->b, f};
            try {
                const double residual =
                    model.distance(evaluate_history(model, beta, with_e), evaluate_history(model, beta, without_e));
                record(report.backward_strong, residual);
                if (retro.implies) record(report.backward, residual);
            } catch (const UndefinedUpdate&) {
                // p(F | B E A b) fell under the zero threshold: not applicable.
            }
        }
    }
    return report;
}

}  // namespace gbt
