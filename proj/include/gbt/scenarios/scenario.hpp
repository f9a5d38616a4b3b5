#pragma once

#include "gbt/scenarios/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gbt::scenarios {

// Experiments listed by their outcome labels. Every experiment is nonempty
// without repeated labels, and every label occurs in some experiment.
class Scenario {
public:
    Scenario(std::vector<std::string> labels, std::vector<std::vector<std::string>> experiments);

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<std::vector<std::string>>& experiments() const noexcept { return experiments_; }
    // Position of a label in labels(); StructuralError if unknown.
    std::size_t index_of(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::string>> experiments_;
    std::map<std::string, std::size_t> index_;
};

// Probability per label, kept exact.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::map<std::string, Rational> probs);

    const std::map<std::string, Rational>& probs() const noexcept { return probs_; }
    const Rational& at(const std::string& label) const;
    // Every label of the scenario present and nothing else.
    void require_covers(const Scenario& s) const;

private:
    std::map<std::string, Rational> probs_;
};

struct ExperimentSum {
    std::vector<std::string> labels;
    Rational exact;
    double value = 0.0;
    double residual = 0.0;
    bool exact_one = false;
};

struct Validation {
    std::vector<ExperimentSum> sums;
    double tol = 1e-9;
    bool pass = false;
};

// Per-experiment sums; pass when every |sum - 1| <= tol.
Validation validate(const Scenario& s, const Assignment& a, double tol = 1e-9);

// {"labels": [...], "experiments": [[...], ...], "assignment": {label: prob}}
struct ScenarioDocument {
    Scenario scenario;
    std::optional<Assignment> assignment;
};

ScenarioDocument scenario_from_json(const nlohmann::json& j);
// Either {"assignment": {...}} or the label map itself.
Assignment assignment_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Scenario& s, const std::optional<Assignment>& a = std::nullopt);
nlohmann::json to_json(const Validation& v);

}  // namespace gbt::scenarios
