#include "gbt/core/axioms.hpp"
#include "gbt/core/reports.hpp"
#include "gbt/core/sequential.hpp"

#include <cmath>

namespace gbt {

double JointTable::marginal_e(std::size_t i) const {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j) s += at(i, j);
    return s;
}

double JointTable::marginal_f(std::size_t j) const {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += at(i, j);
    return s;
}

double JointTable::total() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

RetrodictionReport retrodiction_report(const JointTable& table, std::size_t e_block, std::size_t f_block, double tol) {
    if (e_block >= table.rows || f_block >= table.cols) throw StructuralError("retrodiction_report: block index out of range");
    RetrodictionReport r;
    r.marginal_f = table.marginal_f(f_block);
    r.direct_f = table.direct_f.at(f_block);
    if (r.marginal_f > kZeroProbability) r.conditional = table.at(e_block, f_block) / r.marginal_f;
    r.unaffected = std::abs(r.marginal_f - r.direct_f) <= tol;
    r.implies = r.conditional.has_value() && std::abs(*r.conditional - 1.0) <= tol && r.unaffected;
    return r;
}

std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Rejected: return "rejected";
    }
    return "unknown";
}

Verdict verdict_from(std::size_t applicable, double max_residual, double tol) noexcept {
    if (applicable == 0) return Verdict::Inconclusive;
    return max_residual <= tol ? Verdict::Pass : Verdict::Fail;
}

void ClaimReport::observe(std::size_t trial, double residual, std::string_view where) {
    ++applicable;
    const bool worse = std::isnan(residual) || residual > max_residual;
    if (worse) max_residual = residual;
    if ((std::isnan(residual) || residual > tol) && (worse || !counterexample)) {
        counterexample = Counterexample{trial, std::string(where), residual};
    }
}

void ClaimReport::finish() {
    if (verdict == Verdict::Rejected) return;
    verdict = std::isnan(max_residual) ? Verdict::Fail : verdict_from(applicable, max_residual, tol);
}

nlohmann::json to_json(const Counterexample& c) {
    return {{"trial", c.trial}, {"where", c.where}, {"residual", c.residual}};
}

nlohmann::json to_json(const ClaimReport& r) {
    nlohmann::json j{{"claim", r.claim},
                     {"trials", r.trials},
                     {"applicable", r.applicable},
                     {"max_residual", r.max_residual},
                     {"tol", r.tol},
                     {"verdict", verdict_name(r.verdict)}};
    if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

bool AxiomReport::pass() const {
    for (const AxiomResult* r : all()) {
        if (!r->pass()) return false;
    }
    return true;
}

bool AxiomReport::any_inconclusive() const {
    for (const AxiomResult* r : all()) {
        if (r->inconclusive()) return true;
    }
    return false;
}

nlohmann::json to_json(const AxiomResult& r) {
    return {{"axiom", r.axiom},
            {"trials", r.trials},
            {"applicable", r.applicable},
            {"max_residual", r.max_residual},
            {"tol", r.tol},
            {"pass", r.pass()},
            {"verdict", r.inconclusive() ? "inconclusive" : (r.pass() ? "pass" : "fail")}};
}

nlohmann::json to_json(const AxiomReport& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const AxiomResult* a : r.all()) arr.push_back(to_json(*a));
    return arr;
}

Verdict TheoremReport::verdict() const {
    bool inconclusive = false;
    bool failed = false;
    for (const auto& c : claims) {
        if (c.verdict == Verdict::Rejected) return Verdict::Rejected;
        failed = failed || c.verdict == Verdict::Fail;
        inconclusive = inconclusive || c.verdict == Verdict::Inconclusive;
    }
    if (failed) return Verdict::Fail;
    if (inconclusive || claims.empty()) return Verdict::Inconclusive;
    return Verdict::Pass;
}

const ClaimReport& TheoremReport::claim(const std::string& name) const {
    for (const auto& c : claims) {
        if (c.claim == name) return c;
    }
    throw StructuralError("no claim named " + name + " in " + theorem);
}

nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims) claims.push_back(to_json(c));
    return {{"theorem", r.theorem}, {"verdict", verdict_name(r.verdict())}, {"claims", std::move(claims)}};
}

}  // namespace gbt
