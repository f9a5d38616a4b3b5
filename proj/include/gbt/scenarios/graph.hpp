#pragma once

#include "gbt/scenarios/scenario.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gbt::scenarios {

// Vertices are labels; a and b are adjacent when some experiment contains
// both. Adjacency rows are 64-bit masks.
class ExclusivityGraph {
public:
    static constexpr std::size_t kMaxVertices = 64;

    // Throws ResourceError above kMaxVertices.
    ExclusivityGraph(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::uint64_t neighbours(std::size_t v) const { return adj_.at(v); }
    bool adjacent(std::size_t a, std::size_t b) const;
    // (a, b) with a < b, ascending.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> adj_;
};

ExclusivityGraph build_graph(const Scenario& s);

// Maximal cliques by Bron-Kerbosch with pivoting, as vertex masks.
// `cap` lowers the vertex limit (ResourceError when exceeded).
std::vector<std::uint64_t> maximal_cliques(const ExclusivityGraph& g, std::size_t cap = ExclusivityGraph::kMaxVertices);

// Maximal cliques as sorted label lists, ordered lexicographically.
std::vector<std::vector<std::string>> pairwise_exclusive_sets(const ExclusivityGraph& g,
                                                              std::size_t cap = ExclusivityGraph::kMaxVertices);

struct Violation {
    std::vector<std::string> clique;
    Rational exact;
    double sum = 0.0;
    double excess = 0.0;
};

// Maximal cliques whose probabilities add up to more than 1 + tol, largest
// excess first. Checking maximal cliques is enough: probabilities are
// nonnegative, so a clique's sum never exceeds that of a maximal clique
// containing it.
std::vector<Violation> ep_violations(const Scenario& s, const Assignment& a, double tol = 1e-9);

nlohmann::json to_json(const Violation& v);

}  // namespace gbt::scenarios
