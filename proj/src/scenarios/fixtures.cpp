#include "gbt/scenarios/fixtures.hpp"

#include "gbt/errors.hpp"

namespace gbt::scenarios {

Scenario figure1_scenario() {
    return Scenario({"a", "b", "c", "d", "e", "f"}, {{"a", "d", "f"}, {"d", "b", "e"}, {"a", "b", "c"}});
}

Assignment figure1_assignment() {
    return Assignment({{"a", Rational(1, 2)},
                       {"b", Rational(3, 8)},
                       {"c", Rational(1, 8)},
                       {"d", Rational(3, 8)},
                       {"e", Rational(1, 4)},
                       {"f", Rational(1, 8)}});
}

Assignment uniform_assignment(const Scenario& s, const Rational& p) {
    std::map<std::string, Rational> probs;
    for (const auto& label : s.labels()) probs.emplace(label, p);
    return Assignment(std::move(probs));
}

Scenario kcbs_scenario() {
    std::vector<std::string> labels;
    for (int i = 0; i < 5; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::vector<std::string>> experiments;
    for (std::size_t i = 0; i < 5; ++i) experiments.push_back({labels[i], labels[(i + 1) % 5]});
    return Scenario(labels, experiments);
}

Scenario disjoint_scenario() { return Scenario({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"c", "d", "e"}}); }

std::vector<std::string> builtin_names() { return {"figure1", "kcbs", "disjoint"}; }

Scenario builtin_scenario(const std::string& name) {
    if (name == "figure1") return figure1_scenario();
    if (name == "kcbs") return kcbs_scenario();
    if (name == "disjoint") return disjoint_scenario();
    throw StructuralError("unknown built-in scenario \"" + name + "\" (known: figure1, kcbs, disjoint)");
}

std::optional<Assignment> builtin_assignment(const std::string& name) {
    if (name == "figure1") return figure1_assignment();
    if (name == "kcbs") return uniform_assignment(kcbs_scenario(), Rational(1, 2));
    if (name == "disjoint") {
        return Assignment({{"a", Rational(1, 2)},
                           {"b", Rational(1, 2)},
                           {"c", Rational(1, 3)},
                           {"d", Rational(1, 3)},
                           {"e", Rational(1, 3)}});
    }
    builtin_scenario(name);
    return std::nullopt;
}

std::map<std::string, linalg::ComplexMatrix> figure1_projectors(const std::optional<linalg::ComplexMatrix>& u) {
    const auto basis = [&](std::size_t k) {
        linalg::ComplexMatrix p(3);
        p.set(k, k, 1.0);
        return u ? linalg::ComplexMatrix(*u * p * u->adjoint()) : p;
    };
    return {{"a", basis(0)}, {"b", basis(1)}, {"c", basis(2)}, {"d", basis(2)}, {"e", basis(0)}, {"f", basis(1)}};
}

}  // namespace gbt::scenarios
