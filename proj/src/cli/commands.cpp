#include "gbt/cli/commands.hpp"

#include "gbt/cli/json_io.hpp"
#include "gbt/core/axioms.hpp"
#include "gbt/exclusivity/filter.hpp"
#include "gbt/exclusivity/sampling.hpp"
#include "gbt/ideal/classify.hpp"
#include "gbt/ideal/theorems.hpp"
#include "gbt/quantum/axiom_sampler.hpp"
#include "gbt/quantum/matrix_json.hpp"
#include "gbt/scenarios/fixtures.hpp"
#include "gbt/scenarios/graph.hpp"

#include <algorithm>
#include <cstdio>

namespace gbt::cli {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string braces(const std::vector<std::string>& labels) {
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
    return s + "}";
}

std::string claim_line(const ClaimReport& c) {
    std::string upper(verdict_name(c.verdict));
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    std::string line = upper + " " + c.claim + " applicable=" + std::to_string(c.applicable) +
                       " max_residual=" + num(c.max_residual) + " tol=" + num(c.tol);
    if (!c.note.empty() && c.verdict != Verdict::Pass) line += " (" + c.note + ")";
    return line;
}

// Worst exit code wins: claim failure over inconclusive over pass.
int combine(int a, int b) {
    const auto rank = [](int c) { return c == kExitClaimFailed ? 2 : c == kExitInconclusive ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

void add_theorem(CommandOutput& out, nlohmann::json& reports, const TheoremReport& r) {
    reports.push_back(to_json(r));
    out.text.push_back(r.theorem + ": " + std::string(verdict_name(r.verdict())));
    for (const auto& c : r.claims) out.text.push_back("  " + claim_line(c));
    out.exit_code = combine(out.exit_code, exit_code_for(r.verdict()));
}

}  // namespace

int exit_code_for(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return kExitPass;
        case Verdict::Inconclusive: return kExitInconclusive;
        case Verdict::Fail:
        case Verdict::Rejected: return kExitClaimFailed;
    }
    return kExitClaimFailed;
}

CommandOutput check_axioms_command(const RunConfig& cfg) {
    const quantum::QuantumModel model(cfg.dim);
    quantum::QuantumAxiomSampler sampler(cfg.dim, cfg.seed);
    const AxiomTolerances tol{cfg.tol, cfg.tol, 10.0 * cfg.tol};
    const AxiomReport report = check_axioms(model, sampler, cfg.trials, tol);

    CommandOutput out;
    out.result = to_json(report);
    for (const AxiomResult* r : report.all()) {
        const Verdict v = verdict_from(r->applicable, r->max_residual, r->tol);
        out.exit_code = combine(out.exit_code, exit_code_for(std::isnan(r->max_residual) ? Verdict::Fail : v));
        out.text.push_back(std::string(r->inconclusive() ? "INCONCLUSIVE" : r->pass() ? "PASS" : "FAIL") + " " + r->axiom +
                           " applicable=" + std::to_string(r->applicable) + "/" + std::to_string(r->trials) +
                           " max_residual=" + num(r->max_residual) + " tol=" + num(r->tol));
    }
    return out;
}

CommandOutput classify_instrument_command(const RunConfig& cfg, const std::string& file, const std::string& builtin) {
    if (file.empty() == builtin.empty()) throw InputError("classify-instrument: give exactly one of --in FILE or --builtin trine");
    if (!builtin.empty() && builtin != "trine") throw InputError("unknown built-in instrument \"" + builtin + "\" (known: trine)");
    const quantum::QuantumInstrument inst = builtin.empty() ? quantum::instrument_from_json(load_json_file(file))
                                                            : ideal::trine_instrument();
    const ideal::Classification c = ideal::classify_instrument(inst);

    CommandOutput out;
    out.result = {{"dim", inst.dim()}, {"outcomes", inst.outcomes()}, {"classification", ideal::to_json(c)}};
    if (const auto* p = std::get_if<ideal::Projective>(&c)) {
        out.text.push_back("projective: " + std::to_string(p->projectors.size()) + " orthogonal projectors, Lueders form " +
                           (p->luders_form ? "yes" : "no") + " (defect " + num(p->luders_defect) + ")");
    } else {
        const auto& n = std::get<ideal::NonProjective>(c);
        out.text.push_back("non-projective: " + n.reason);
        const auto search = ideal::search_refinability_witness(inst, {quantum::KrausChannel::identity(inst.dim())}, cfg.seed,
                                                               std::min<std::size_t>(cfg.trials, 20), 8, cfg.tol);
        out.result["witness"] = ideal::to_json(search);
        out.text.push_back(search.found ? "refinement witness: residual " + num(search.residual) + " with A' = I"
                                        : "no refinement witness found for A' = I");
    }
    return out;
}

CommandOutput verify_theorems_command(const RunConfig& cfg, const std::string& which, std::size_t refinements) {
    CommandOutput out;
    nlohmann::json reports = nlohmann::json::array();
    const ideal::SweepConfig sweep{cfg.dim, cfg.trials, cfg.seed, cfg.tol, 2};
    if (which == "t1") {
        add_theorem(out, reports, ideal::verify_identity_ideal(sweep));
    } else if (which == "corollary") {
        add_theorem(out, reports, ideal::verify_reversible_corollary(sweep));
    } else if (which == "appC") {
        add_theorem(out, reports, ideal::verify_projective_refinable(sweep, refinements));
        const ideal::SweepConfig trine{2, std::min<std::size_t>(cfg.trials, 20), cfg.seed, cfg.tol, 2};
        add_theorem(out, reports,
                    ideal::verify_nonprojective_witness(ideal::trine_instrument(), {quantum::KrausChannel::identity(2)}, trine,
                                                        1e-6));
    } else if (which == "t2") {
        add_theorem(out, reports, exclusivity::sweep_exclusivity_bound(cfg.dim, cfg.trials, cfg.seed, cfg.tol));
    } else if (which == "lemma5") {
        add_theorem(out, reports, exclusivity::sweep_same_effect(cfg.dim, cfg.trials, cfg.seed, cfg.tol));
    } else {
        throw InputError("--which must be one of t1, corollary, appC, t2, lemma5");
    }
    out.result = {{"which", which}, {"reports", std::move(reports)}};
    return out;
}

CommandOutput filter_run_command(const RunConfig& cfg, const std::string& outcomes_file, const std::string& belief_file) {
    const auto outcomes = outcomes_from_json(load_json_file(outcomes_file));
    const auto belief = belief_from_json(load_json_file(belief_file));
    const exclusivity::FilterResult r = exclusivity::run_filter_procedure(outcomes, belief, cfg.tol);

    CommandOutput out;
    out.result = exclusivity::to_json(r);
    out.exit_code = r.pass ? kExitPass : kExitClaimFailed;
    for (std::size_t s = 0; s < r.direct.size(); ++s) {
        out.text.push_back("s=" + std::to_string(s + 1) + " q=" + num(r.q[s]) + " p=" + num(r.direct[s]) +
                           " residual=" + num(r.per_outcome_residual[s]));
    }
    out.text.push_back("s=" + std::to_string(r.q.size()) + " q=" + num(r.q.back()) + " (no outcome)");
    out.text.push_back(std::string(r.pass ? "PASS" : "FAIL") + " sum=" + num(r.direct_sum) + " q_total=" + num(r.q_total));
    return out;
}

CommandOutput ep_check_command(const RunConfig& cfg, const std::string& scenario_file, const std::string& assignment_file,
                               const std::string& builtin) {
    using namespace scenarios;
    if (scenario_file.empty() == builtin.empty()) throw InputError("ep-check: give exactly one of --scenario FILE or --builtin NAME");
    std::optional<ScenarioDocument> doc;
    if (builtin.empty()) {
        doc.emplace(scenario_from_json(load_json_file(scenario_file)));
    } else {
        doc.emplace(ScenarioDocument{builtin_scenario(builtin), builtin_assignment(builtin)});
    }
    if (!assignment_file.empty()) {
        doc->assignment = assignment_from_json(load_json_file(assignment_file));
        doc->assignment->require_covers(doc->scenario);
    }

    const ExclusivityGraph g = build_graph(doc->scenario);
    const auto cliques = pairwise_exclusive_sets(g);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({g.labels()[a], g.labels()[b]});

    CommandOutput out;
    out.result = {{"scenario", to_json(doc->scenario, doc->assignment)},
                  {"graph", {{"vertices", g.size()}, {"edges", std::move(edges)}}},
                  {"pairwise_exclusive_sets", cliques}};
    out.text.push_back(std::to_string(g.size()) + " outcomes, " + std::to_string(doc->scenario.experiments().size()) +
                       " experiments, " + std::to_string(cliques.size()) + " maximal pairwise exclusive sets");
    for (const auto& c : cliques) out.text.push_back("  clique " + braces(c));
    if (!doc->assignment) {
        out.text.push_back("no assignment given");
        return out;
    }

    const Validation v = validate(doc->scenario, *doc->assignment, cfg.tol);
    out.result["validation"] = to_json(v);
    for (const auto& s : v.sums) {
        out.text.push_back("  experiment " + braces(s.labels) + " sum=" + to_string(s.exact) + (s.exact_one ? " (exact)" : ""));
    }
    const auto violations = ep_violations(doc->scenario, *doc->assignment, cfg.tol);
    nlohmann::json vj = nlohmann::json::array();
    for (const auto& x : violations) {
        vj.push_back(to_json(x));
        out.text.push_back("VIOLATION " + braces(x.clique) + " sum=" + to_string(x.exact) + " = " + num(x.sum) + " > 1");
    }
    out.result["violations"] = std::move(vj);
    const bool pass = v.pass && violations.empty();
    out.result["pass"] = pass;
    out.text.push_back(std::string(v.pass ? "normalization ok" : "normalization FAILED") + ", " +
                       (violations.empty() ? "no exclusivity violation" : std::to_string(violations.size()) + " violation(s)"));
    out.exit_code = pass ? kExitPass : kExitClaimFailed;
    return out;
}

}  // namespace gbt::cli
