#include "gbt/ideal/classify.hpp"

#include "gbt/errors.hpp"
#include "gbt/ideal/refinability.hpp"
#include "gbt/ideal/refinements.hpp"
#include "gbt/linalg/spectral.hpp"
#include "gbt/quantum/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gbt::ideal {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Eigenvalue farthest from {0, 1}.
double worst_eigenvalue(const ComplexMatrix& m) {
    double worst = 0.0;
    double gap = -1.0;
    for (double v : linalg::eigh(m).values) {
        const double g = std::min(std::abs(v), std::abs(v - 1.0));
        if (g > gap) {
            gap = g;
            worst = v;
        }
    }
    return worst;
}

}  // namespace

double luders_defect(const QuantumInstrument& inst, const std::vector<ComplexMatrix>& projectors) {
    if (projectors.size() != inst.outcomes()) throw StructuralError("luders_defect: one projector per outcome expected");
    const std::size_t d = inst.dim();
    double defect = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            ComplexMatrix unit(d);
            unit.set(a, b, 1.0);
            for (std::size_t i = 0; i < inst.outcomes(); ++i) {
                const ComplexMatrix expected = projectors[i] * unit * projectors[i];
                defect = std::max(defect, max_abs_diff(inst.apply_branch(i, unit), expected));
            }
        }
    }
    return defect;
}

Classification classify_instrument(const QuantumInstrument& inst, const ToleranceConfig& tol) {
    const auto effects = instrument_effects(inst);
    for (std::size_t i = 0; i < effects.size(); ++i) {
        if (!linalg::is_projector(effects[i], tol)) {
            return NonProjective{i, "effect " + std::to_string(i) + " is not a projector: eigenvalue " +
                                        fmt(worst_eigenvalue(effects[i])) + " is neither 0 nor 1"};
        }
    }
    for (std::size_t i = 0; i < effects.size(); ++i) {
        for (std::size_t j = i + 1; j < effects.size(); ++j) {
            const double overlap = max_abs(effects[i] * effects[j]);
            if (overlap > tol.eq_tol()) {
                return NonProjective{i, "effects " + std::to_string(i) + " and " + std::to_string(j) +
                                            " are not orthogonal: |A_i A_j|_max = " + fmt(overlap)};
            }
        }
    }
    Projective p;
    p.projectors = effects;
    p.luders_defect = luders_defect(inst, effects);
    p.luders_form = p.luders_defect <= tol.eq_tol();
    return p;
}

nlohmann::json to_json(const Classification& c) {
    if (const auto* p = std::get_if<Projective>(&c)) {
        nlohmann::json ranks = nlohmann::json::array();
        for (const auto& q : p->projectors) ranks.push_back(static_cast<long long>(std::llround(q.trace().real())));
        return {{"class", "projective"},
                {"outcomes", p->projectors.size()},
                {"ranks", ranks},
                {"luders_form", p->luders_form},
                {"luders_defect", p->luders_defect}};
    }
    const auto& n = std::get<NonProjective>(c);
    return {{"class", "non_projective"}, {"outcome", n.outcome}, {"reason", n.reason}};
}

QuantumInstrument trine_instrument() {
    std::vector<QuantumInstrument::Branch> branches;
    const double w = std::sqrt(2.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
        // Bloch angle 2 pi k / 3 on the equator: (|0> + e^{i phi}|1>)/sqrt 2.
        const double phi = 2.0 * std::numbers::pi * k / 3.0;
        const std::vector<linalg::Complex> psi{1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), phi)};
        branches.push_back({ComplexMatrix::outer(psi) * w});
    }
    return QuantumInstrument(std::move(branches));
}

WitnessSearch search_refinability_witness(const QuantumInstrument& coarse, const std::vector<KrausChannel>& reversals,
                                          std::uint64_t seed, std::size_t attempts, std::size_t belief_trials, double tol) {
    if (reversals.empty()) throw StructuralError("search_refinability_witness: no reversal candidates");
    WitnessSearch out;
    out.candidates = reversals.size();
    out.report = ClaimReport::start("refinability_witness", attempts, 10.0 * tol);
    out.report.note = "falsifier over the given reversal candidates only";

    const auto effects = instrument_effects(coarse);
    const ToleranceConfig tolerances;
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < effects.size(); ++i) {
        if (!linalg::is_projector(effects[i], tolerances)) targets.push_back(i);
    }
    if (targets.empty()) {
        out.report.verdict = Verdict::Inconclusive;
        out.report.note = "every effect is a projector; the sub-effect construction does not apply";
        return out;
    }

    const std::size_t d = coarse.dim();
    for (std::size_t t = 0; t < attempts && !out.found; ++t) {
        Rng rng(derive_seed(seed, "witness", t));
        const std::size_t i = targets[t % targets.size()];
        const ComplexMatrix& a = effects[i];
        const ComplexMatrix support = linalg::support_projector(a);
        const ComplexMatrix sigma = quantum::random_density_on(support, rng);
        const ComplexMatrix inv = linalg::psd_inv_sqrt(a);
        const double top = linalg::eigh(inv * sigma * inv).values.back();
        const ComplexMatrix b = sigma * (0.5 / top);

        std::vector<ComplexMatrix> fine_effects{b, linalg::hermitian_part(a - b)};
        std::vector<std::size_t> grouping{i, i};
        for (std::size_t j = 0; j < effects.size(); ++j) {
            if (j == i) continue;
            fine_effects.push_back(effects[j]);
            grouping.push_back(j);
        }
        InstrumentRefinement fine{sqrt_instrument(fine_effects), grouping};

        double weakest = INFINITY;
        double weakest_exact = INFINITY;
        for (std::size_t c = 0; c < reversals.size(); ++c) {
            const ClaimReport r = check_sequential_refinability(coarse, reversals[c], fine,
                                                                random_beliefs(d, derive_seed(seed, "witness-beliefs", t)),
                                                                belief_trials, tol);
            weakest = std::min(weakest, r.max_residual);
            weakest_exact = std::min(weakest_exact, refinability_operator_defect(coarse, reversals[c], fine));
        }
        out.report.observe(t, weakest, "outcome " + std::to_string(i));
        if (weakest > 10.0 * tol) {
            out.found = true;
            out.outcome = i;
            out.residual = weakest;
            out.operator_defect = weakest_exact;
            out.refinement = std::move(fine);
        }
    }
    // Finding a witness is the expected result here, so it counts as a pass.
    out.report.verdict = out.found ? Verdict::Pass : Verdict::Fail;
    return out;
}

nlohmann::json to_json(const WitnessSearch& w) {
    nlohmann::json j{{"found", w.found},
                     {"candidates", w.candidates},
                     {"residual", w.residual},
                     {"operator_defect", w.operator_defect},
                     {"report", to_json(w.report)}};
    if (w.found) j["outcome"] = w.outcome;
    return j;
}

}  // namespace gbt::ideal
