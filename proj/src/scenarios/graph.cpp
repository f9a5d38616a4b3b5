#include "gbt/scenarios/graph.hpp"

#include "gbt/errors.hpp"

#include <algorithm>
#include <bit>

namespace gbt::scenarios {

namespace {

std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

void require_cap(std::size_t n, std::size_t cap) {
    const std::size_t limit = std::min(cap, ExclusivityGraph::kMaxVertices);
    if (n > limit) {
        throw ResourceError("exclusivity graph has " + std::to_string(n) + " vertices; the clique enumeration limit is " +
                            std::to_string(limit));
    }
}

// Pivot u maximizing |P & N(u)| over P | X.
void bron_kerbosch(const ExclusivityGraph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
    if (p == 0) {
        if (x == 0) out.push_back(r);
        return;
    }
    std::size_t pivot = 0;
    int best = -1;
    for (std::uint64_t c = p | x; c != 0; c &= c - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(c));
        const int score = std::popcount(p & g.neighbours(u));
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    for (std::uint64_t c = p & ~g.neighbours(pivot); c != 0; c &= c - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(c));
        bron_kerbosch(g, r | bit(v), p & g.neighbours(v), x & g.neighbours(v), out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

}  // namespace

ExclusivityGraph::ExclusivityGraph(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
    require_cap(labels_.size(), kMaxVertices);
    for (const auto& [a, b] : edges) {
        if (a >= size() || b >= size()) throw StructuralError("edge endpoint out of range");
        if (a == b) continue;
        adj_[a] |= bit(b);
        adj_[b] |= bit(a);
    }
}

bool ExclusivityGraph::adjacent(std::size_t a, std::size_t b) const { return (adj_.at(a) & bit(b)) != 0; }

std::vector<std::pair<std::size_t, std::size_t>> ExclusivityGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = a + 1; b < size(); ++b) {
            if (adjacent(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

ExclusivityGraph build_graph(const Scenario& s) {
    require_cap(s.labels().size(), ExclusivityGraph::kMaxVertices);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& exp : s.experiments()) {
        for (std::size_t i = 0; i < exp.size(); ++i) {
            for (std::size_t j = i + 1; j < exp.size(); ++j) edges.emplace_back(s.index_of(exp[i]), s.index_of(exp[j]));
        }
    }
    return ExclusivityGraph(s.labels(), edges);
}

std::vector<std::uint64_t> maximal_cliques(const ExclusivityGraph& g, std::size_t cap) {
    require_cap(g.size(), cap);
    std::vector<std::uint64_t> out;
    if (g.size() == 0) return out;
    const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : bit(g.size()) - 1;
    bron_kerbosch(g, 0, all, 0, out);
    return out;
}

std::vector<std::vector<std::string>> pairwise_exclusive_sets(const ExclusivityGraph& g, std::size_t cap) {
    std::vector<std::vector<std::string>> out;
    for (std::uint64_t mask : maximal_cliques(g, cap)) {
        std::vector<std::string> clique;
        for (std::uint64_t c = mask; c != 0; c &= c - 1) clique.push_back(g.labels()[static_cast<std::size_t>(std::countr_zero(c))]);
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Violation> ep_violations(const Scenario& s, const Assignment& a, double tol) {
    a.require_covers(s);
    std::vector<Violation> out;
    for (auto& clique : pairwise_exclusive_sets(build_graph(s))) {
        Rational sum = 0;
        for (const auto& label : clique) sum += a.at(label);
        const double value = to_double(sum);
        if (value > 1.0 + tol) out.push_back({std::move(clique), sum, value, to_double(Rational(sum - 1))});
    }
    std::stable_sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) { return x.exact > y.exact; });
    return out;
}

nlohmann::json to_json(const Violation& v) {
    return {{"clique", v.clique}, {"sum", to_string(v.exact)}, {"value", v.sum}, {"excess", v.excess}};
}

}  // namespace gbt::scenarios
