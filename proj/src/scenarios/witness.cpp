#include "gbt/scenarios/witness.hpp"

#include "gbt/errors.hpp"
#include "gbt/linalg/spectral.hpp"

#include <algorithm>

namespace gbt::scenarios {

WitnessReport quantum_witness_check(const Scenario& s, const std::map<std::string, linalg::ComplexMatrix>& projectors,
                                    const quantum::DensityBelief& belief, const linalg::ToleranceConfig& tol) {
    std::vector<const linalg::ComplexMatrix*> q;
    for (const auto& label : s.labels()) {
        const auto it = projectors.find(label);
        if (it == projectors.end()) throw StructuralError("no projector for label \"" + label + "\"");
        linalg::require_same_dim(it->second, belief.matrix(), "quantum_witness_check");
        if (!linalg::is_projector(it->second, tol)) throw DomainError("operator for \"" + label + "\" is not a projector");
        q.push_back(&it->second);
    }

    WitnessReport r;
    const ExclusivityGraph g = build_graph(s);
    for (const auto& [a, b] : g.edges()) {
        if (max_abs(*q[a] * *q[b]) > tol.eq_tol()) r.non_orthogonal.emplace_back(s.labels()[a], s.labels()[b]);
    }
    r.consistent = r.non_orthogonal.empty();
    for (auto& clique : pairwise_exclusive_sets(g)) {
        double sum = 0.0;
        for (const auto& label : clique) sum += trace_product(*q[s.index_of(label)], belief.matrix()).real();
        r.max_sum = std::max(r.max_sum, sum);
        r.sums.push_back({std::move(clique), sum});
    }
    r.pass = r.consistent && r.max_sum <= 1.0 + tol.eq_tol();
    return r;
}

nlohmann::json to_json(const WitnessReport& r) {
    nlohmann::json sums = nlohmann::json::array();
    for (const auto& c : r.sums) sums.push_back({{"clique", c.clique}, {"sum", c.sum}});
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& [a, b] : r.non_orthogonal) bad.push_back({a, b});
    return {{"consistent", r.consistent}, {"non_orthogonal", std::move(bad)}, {"clique_sums", std::move(sums)},
            {"max_sum", r.max_sum}, {"pass", r.pass}};
}

}  // namespace gbt::scenarios
