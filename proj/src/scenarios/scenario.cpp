#include "gbt/scenarios/scenario.hpp"

#include "gbt/errors.hpp"

#include <cmath>
#include <set>

namespace gbt::scenarios {

Scenario::Scenario(std::vector<std::string> labels, std::vector<std::vector<std::string>> experiments)
    : labels_(std::move(labels)), experiments_(std::move(experiments)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw StructuralError("labels[" + std::to_string(i) + "] is empty");
        if (!index_.emplace(labels_[i], i).second) throw StructuralError("duplicate label \"" + labels_[i] + "\"");
    }
    std::set<std::string> used;
    for (std::size_t e = 0; e < experiments_.size(); ++e) {
        const auto& exp = experiments_[e];
        if (exp.empty()) throw StructuralError("experiments[" + std::to_string(e) + "] has no outcomes");
        std::set<std::string> seen;
        for (const auto& label : exp) {
            if (!index_.count(label)) {
                throw StructuralError("experiments[" + std::to_string(e) + "] uses undeclared label \"" + label + "\"");
            }
            if (!seen.insert(label).second) {
                throw StructuralError("experiments[" + std::to_string(e) + "] repeats label \"" + label + "\"");
            }
            used.insert(label);
        }
    }
    for (const auto& label : labels_) {
        if (!used.count(label)) throw StructuralError("label \"" + label + "\" belongs to no experiment");
    }
}

std::size_t Scenario::index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) throw StructuralError("unknown label \"" + label + "\"");
    return it->second;
}

Assignment::Assignment(std::map<std::string, Rational> probs) : probs_(std::move(probs)) {
    for (const auto& [label, p] : probs_) {
        if (p < 0 || p > 1) throw DomainError("probability of \"" + label + "\" is " + to_string(p) + ", outside [0, 1]");
    }
}

const Rational& Assignment::at(const std::string& label) const {
    const auto it = probs_.find(label);
    if (it == probs_.end()) throw StructuralError("assignment has no probability for \"" + label + "\"");
    return it->second;
}

void Assignment::require_covers(const Scenario& s) const {
    for (const auto& label : s.labels()) at(label);
    for (const auto& [label, p] : probs_) s.index_of(label);
}

Validation validate(const Scenario& s, const Assignment& a, double tol) {
    a.require_covers(s);
    Validation v;
    v.tol = tol;
    v.pass = true;
    for (const auto& exp : s.experiments()) {
        ExperimentSum sum;
        sum.labels = exp;
        for (const auto& label : exp) sum.exact += a.at(label);
        sum.value = to_double(sum.exact);
        sum.residual = std::abs(sum.value - 1.0);
        sum.exact_one = sum.exact == 1;
        v.pass = v.pass && sum.residual <= tol;
        v.sums.push_back(std::move(sum));
    }
    return v;
}

namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw StructuralError(where + ": expected a list of labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw StructuralError(where + "[" + std::to_string(i) + "]: expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

}  // namespace

ScenarioDocument scenario_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw StructuralError("scenario: expected an object {labels, experiments, assignment}");
    if (!j.contains("experiments")) throw StructuralError("scenario.experiments: missing");
    const auto& ex = j["experiments"];
    if (!ex.is_array()) throw StructuralError("scenario.experiments: expected a list of label lists");
    std::vector<std::vector<std::string>> experiments;
    for (std::size_t e = 0; e < ex.size(); ++e) experiments.push_back(string_list(ex[e], "experiments[" + std::to_string(e) + "]"));

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = string_list(j["labels"], "labels");
    } else {
        // Order of first appearance.
        std::set<std::string> seen;
        for (const auto& exp : experiments) {
            for (const auto& l : exp) {
                if (seen.insert(l).second) labels.push_back(l);
            }
        }
    }
    ScenarioDocument doc{Scenario(std::move(labels), std::move(experiments)), std::nullopt};
    if (j.contains("assignment")) {
        doc.assignment = assignment_from_json(j["assignment"]);
        doc.assignment->require_covers(doc.scenario);
    }
    return doc;
}

Assignment assignment_from_json(const nlohmann::json& j) {
    const nlohmann::json& map = j.is_object() && j.contains("assignment") ? j["assignment"] : j;
    if (!map.is_object()) throw StructuralError("assignment: expected an object {label: probability}");
    std::map<std::string, Rational> probs;
    for (const auto& [label, value] : map.items()) probs.emplace(label, rational_from_json(value, "assignment." + label));
    return Assignment(std::move(probs));
}

nlohmann::json to_json(const Scenario& s, const std::optional<Assignment>& a) {
    nlohmann::json j{{"labels", s.labels()}, {"experiments", s.experiments()}};
    if (a) {
        nlohmann::json probs = nlohmann::json::object();
        for (const auto& [label, p] : a->probs()) probs[label] = to_string(p);
        j["assignment"] = std::move(probs);
    }
    return j;
}

nlohmann::json to_json(const Validation& v) {
    nlohmann::json sums = nlohmann::json::array();
    for (const auto& s : v.sums) {
        sums.push_back({{"experiment", s.labels}, {"sum", to_string(s.exact)}, {"value", s.value}, {"exact_one", s.exact_one}});
    }
    return {{"sums", std::move(sums)}, {"tol", v.tol}, {"pass", v.pass}};
}

}  // namespace gbt::scenarios
