#pragma once

#include "gbt/core/reports.hpp"
#include "gbt/exclusivity/exclusivity.hpp"

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

namespace gbt::exclusivity {

using quantum::DensityBelief;

// Sequence of binary experiments: at round j apply A_j and observe E_j
// against its complement. E_j reports outcome j and stops; the complement
// applies A'_j and continues. After k rounds outcome k+1 is reported.
struct FilterResult {
    // q[s-1] for s = 1..k+1.
    std::vector<double> q;
    // p(E_s | A_s b) on the initial belief.
    std::vector<double> direct;
    std::vector<double> per_outcome_residual;
    // Rounds whose complement had probability zero; the next belief was set to I/d.
    std::vector<std::size_t> arbitrary_rounds;
    double direct_sum = 0.0;
    double q_total = 0.0;
    bool pass = false;
};

// Throws DomainError if the outcomes are not pairwise exclusive.
FilterResult run_filter_procedure(std::span<const IdealOutcome> outcomes, const DensityBelief& belief, double tol = 1e-9,
                                  const ToleranceConfig& tolerances = {});

nlohmann::json to_json(const FilterResult& r);

using BeliefSource = std::function<DensityBelief(std::size_t)>;

struct Theorem2Report {
    TheoremReport report;
    // Largest sum of direct probabilities over the sampled beliefs. On the
    // rejection path this is computed without the exclusivity check.
    double max_sum = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

// Checks q(s) = p(E_s|A_s b) for s <= k, sum_s p(E_s|A_s b) <= 1 + tol and
// sum q = 1 (within 1e-10) over `trials` beliefs.
Theorem2Report verify_theorem2(std::span<const IdealOutcome> outcomes, const BeliefSource& beliefs, std::size_t trials,
                               double tol = 1e-9);

// For mutually exclusive x1, x2:
//   p(E_2|A_2 A'_1 Ebar_1 A_1 b) p(Ebar_1|A_1 b) = p(E_2|A_2 b)   if p(Ebar_1|A_1 b) != 0
//   p(E_2|A_2 b) = 0                                          otherwise
struct LemmaCheck {
    bool complement_null = false;
    double residual = 0.0;
};

LemmaCheck verify_lemma_sameeffect(const IdealOutcome& x1, const IdealOutcome& x2, const DensityBelief& belief,
                                   const ToleranceConfig& tol = {});

}  // namespace gbt::exclusivity
