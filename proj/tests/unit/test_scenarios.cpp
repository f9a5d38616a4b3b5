#include "gbt/errors.hpp"
#include "gbt/quantum/sampling.hpp"
#include "gbt/scenarios/fixtures.hpp"
#include "gbt/scenarios/graph.hpp"
#include "gbt/scenarios/rational.hpp"
#include "gbt/scenarios/scenario.hpp"
#include "gbt/scenarios/witness.hpp"
#include "cliques.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <set>

namespace {

using gbt::Rng;
using gbt::linalg::ComplexMatrix;
using gbt::quantum::DensityBelief;
using namespace gbt::scenarios;
using Labels = std::vector<std::string>;

nlohmann::json load(const std::string& rel) {
    std::ifstream in(gbt::testing::data_path(rel));
    return nlohmann::json::parse(in);
}

std::uint64_t mask_of(const ExclusivityGraph& g, const Labels& labels) {
    std::uint64_t m = 0;
    for (const auto& l : labels) {
        const auto it = std::find(g.labels().begin(), g.labels().end(), l);
        m |= std::uint64_t{1} << (it - g.labels().begin());
    }
    return m;
}

TEST(Rational, Parsing) {
    EXPECT_EQ(parse_rational("3/8"), Rational(3, 8));
    EXPECT_EQ(parse_rational("0.375"), Rational(3, 8));
    EXPECT_EQ(parse_rational("1"), Rational(1));
    EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
    EXPECT_EQ(parse_rational(" 6/16 "), Rational(3, 8));
    // leading zeros are decimal, not octal
    EXPECT_EQ(parse_rational("010/08"), Rational(5, 4));
    EXPECT_EQ(parse_rational("0.0625"), Rational(1, 16));
    EXPECT_EQ(parse_rational("0"), Rational(0));
    EXPECT_THROW(parse_rational("1/0"), gbt::StructuralError);
    EXPECT_THROW(parse_rational("abc"), gbt::StructuralError);
    EXPECT_THROW(parse_rational(""), gbt::StructuralError);
    EXPECT_EQ(to_string(Rational(5, 4)), "5/4");
    EXPECT_EQ(to_string(Rational(1)), "1");
}

TEST(Rational, FromJsonNumbersStayExact) {
    EXPECT_EQ(rational_from_json(nlohmann::json(0.375), "p"), Rational(3, 8));
    EXPECT_EQ(rational_from_json(nlohmann::json(0.1), "p"), Rational(1, 10));
    EXPECT_EQ(rational_from_json(nlohmann::json(1), "p"), Rational(1));
    EXPECT_EQ(rational_from_json(nlohmann::json("1/3"), "p"), Rational(1, 3));
    EXPECT_THROW(rational_from_json(nlohmann::json::array(), "p"), gbt::StructuralError);
}

TEST(Scenario, Validation) {
    EXPECT_THROW(Scenario({"a", "a"}, {{"a"}}), gbt::StructuralError);
    EXPECT_THROW(Scenario({"a"}, {{"a", "b"}}), gbt::StructuralError);
    EXPECT_THROW(Scenario({"a", "b"}, {{"a"}}), gbt::StructuralError);
    EXPECT_THROW(Scenario({"a"}, {{"a", "a"}}), gbt::StructuralError);
    EXPECT_THROW(Scenario({"a"}, {{}}), gbt::StructuralError);
    EXPECT_THROW(Assignment({{"a", Rational(3, 2)}}), gbt::DomainError);
    const auto s = figure1_scenario();
    EXPECT_THROW(Assignment({{"a", Rational(1)}}).require_covers(s), gbt::StructuralError);
}

TEST(Scenario, Figure1Normalization) {
    const auto v = validate(figure1_scenario(), figure1_assignment());
    EXPECT_TRUE(v.pass);
    ASSERT_EQ(v.sums.size(), 3u);
    for (const auto& s : v.sums) {
        EXPECT_TRUE(s.exact_one);
        EXPECT_EQ(s.exact, Rational(1));
    }
    EXPECT_TRUE(validate(figure1_scenario(), uniform_assignment(figure1_scenario(), Rational(1, 3))).pass);
    EXPECT_FALSE(validate(figure1_scenario(), uniform_assignment(figure1_scenario(), Rational(0))).pass);
}

TEST(Graph, Figure1Edges) {
    const auto g = build_graph(figure1_scenario());
    EXPECT_EQ(g.size(), 6u);
    const std::set<std::pair<std::string, std::string>> expected{{"a", "d"}, {"a", "f"}, {"d", "f"}, {"b", "d"}, {"d", "e"},
                                                                 {"b", "e"}, {"a", "b"}, {"a", "c"}, {"b", "c"}};
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& [a, b] : g.edges()) {
        auto x = g.labels()[a], y = g.labels()[b];
        if (x > y) std::swap(x, y);
        got.emplace(x, y);
    }
    EXPECT_EQ(got, expected);
}

TEST(Graph, SingleExperimentIsComplete) {
    const Scenario s({"p", "q", "r", "t"}, {{"p", "q", "r", "t"}});
    const auto g = build_graph(s);
    EXPECT_EQ(g.edges().size(), 6u);
    EXPECT_EQ(pairwise_exclusive_sets(g), (std::vector<Labels>{{"p", "q", "r", "t"}}));
}

TEST(Graph, DisjointExperimentsGiveDisjointCliques) {
    const auto g = build_graph(disjoint_scenario());
    EXPECT_EQ(pairwise_exclusive_sets(g), (std::vector<Labels>{{"a", "b"}, {"c", "d", "e"}}));
}

TEST(Graph, VertexCap) {
    Labels labels;
    for (int i = 0; i < 65; ++i) labels.push_back("v" + std::to_string(i));
    EXPECT_THROW(ExclusivityGraph(labels, {}), gbt::ResourceError);
    labels.pop_back();
    const ExclusivityGraph g(labels, {});
    EXPECT_THROW(maximal_cliques(g, 10), gbt::ResourceError);
    EXPECT_EQ(maximal_cliques(g).size(), 64u);
}

TEST(Cliques, Figure1) {
    const auto sets = pairwise_exclusive_sets(build_graph(figure1_scenario()));
    const std::vector<Labels> expected{{"a", "b", "c"}, {"a", "b", "d"}, {"a", "d", "f"}, {"b", "d", "e"}};
    EXPECT_EQ(sets, expected);
}

TEST(Cliques, FiveCycle) {
    const auto g = build_graph(kcbs_scenario());
    const auto cliques = maximal_cliques(g);
    EXPECT_EQ(cliques.size(), 5u);
    for (auto c : cliques) EXPECT_EQ(std::popcount(c), 2);
}

TEST(Cliques, MatchBruteForceOnRandomGraphs) {
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.index(0, 11);
        Labels labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        const double density = rng.uniform();
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (rng.uniform() < density) edges.emplace_back(a, b);
            }
        }
        const ExclusivityGraph g(labels, edges);
        auto fast = maximal_cliques(g);
        std::sort(fast.begin(), fast.end());
        EXPECT_EQ(fast, gbt::testing::brute_force_maximal_cliques(g)) << "n=" << n;
    }
}

TEST(Cliques, MatchBruteForceOnBundledScenarios) {
    for (const auto& entry : std::filesystem::directory_iterator(gbt::testing::data_path("scenarios"))) {
        if (entry.path().filename() == "malformed.json") continue;
        SCOPED_TRACE(entry.path().string());
        std::ifstream in(entry.path());
        const auto j = nlohmann::json::parse(in);
        if (!j.contains("experiments")) continue;  // assignment-only file
        const auto doc = scenario_from_json(j);
        const auto g = build_graph(doc.scenario);
        ASSERT_LE(g.size(), 12u);
        auto fast = maximal_cliques(g);
        std::sort(fast.begin(), fast.end());
        EXPECT_EQ(fast, gbt::testing::brute_force_maximal_cliques(g));
    }
    for (const auto& name : builtin_names()) {
        const auto g = build_graph(builtin_scenario(name));
        auto fast = maximal_cliques(g);
        std::sort(fast.begin(), fast.end());
        EXPECT_EQ(fast, gbt::testing::brute_force_maximal_cliques(g)) << name;
    }
}

TEST(Cliques, EveryExperimentIsAClique) {
    const auto s = figure1_scenario();
    const auto g = build_graph(s);
    const auto cliques = maximal_cliques(g);
    for (const auto& e : s.experiments()) {
        const auto m = mask_of(g, e);
        EXPECT_TRUE(std::any_of(cliques.begin(), cliques.end(), [&](std::uint64_t c) { return (c & m) == m; }));
    }
}

TEST(Violations, Figure1Caption) {
    const auto v = ep_violations(figure1_scenario(), figure1_assignment());
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].clique, (Labels{"a", "b", "d"}));
    EXPECT_EQ(v[0].exact, Rational(5, 4));
    EXPECT_DOUBLE_EQ(v[0].sum, 1.25);
    EXPECT_DOUBLE_EQ(v[0].excess, 0.25);
}

TEST(Violations, UniformAndSingleExperiment) {
    EXPECT_TRUE(ep_violations(figure1_scenario(), uniform_assignment(figure1_scenario(), Rational(1, 3))).empty());
    const Scenario single({"p", "q", "r"}, {{"p", "q", "r"}});
    const Assignment a({{"p", Rational(1, 2)}, {"q", Rational(1, 3)}, {"r", Rational(1, 6)}});
    EXPECT_TRUE(ep_violations(single, a).empty());
}

TEST(Violations, SortedByExcess) {
    const auto doc = scenario_from_json(load("scenarios/k4_pairs.json"));
    const auto v = ep_violations(doc.scenario, *doc.assignment);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].exact, Rational(2));

    const Scenario s({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}, {"d", "e"}});
    const Assignment a({{"a", Rational(1, 2)}, {"b", Rational(1, 2)}, {"c", Rational(1, 2)}, {"d", Rational(1, 2)},
                        {"e", Rational(1, 2)}});
    const auto w = ep_violations(s, a);
    ASSERT_FALSE(w.empty());
    for (std::size_t i = 1; i < w.size(); ++i) EXPECT_GE(w[i - 1].excess, w[i].excess);
    EXPECT_EQ(w[0].clique, (Labels{"a", "b", "c"}));
}

TEST(Json, ScenarioFiles) {
    const auto doc = scenario_from_json(load("scenarios/figure1.json"));
    ASSERT_TRUE(doc.assignment.has_value());
    EXPECT_EQ(doc.assignment->at("b"), Rational(3, 8));
    EXPECT_EQ(to_json(doc.scenario, doc.assignment)["labels"].size(), 6u);
    const auto uni = assignment_from_json(load("scenarios/figure1_uniform.json"));
    EXPECT_EQ(uni.at("e"), Rational(1, 3));
    EXPECT_FALSE(scenario_from_json(load("scenarios/ring12.json")).assignment.has_value());
    EXPECT_THROW(scenario_from_json(nlohmann::json{{"labels", {"a"}}}), gbt::StructuralError);
    EXPECT_THROW(scenario_from_json(nlohmann::json{{"experiments", {{"a", 1}}}}), gbt::StructuralError);
    EXPECT_THROW(builtin_scenario("nope"), gbt::StructuralError);
}

TEST(Witness, Figure1QutritRealization) {
    Rng rng(2);
    const auto u = gbt::quantum::random_unitary(3, rng);
    const auto projectors = figure1_projectors(u);
    for (int t = 0; t < 20; ++t) {
        const auto beta = gbt::quantum::random_density(3, rng);
        const auto r = quantum_witness_check(figure1_scenario(), projectors, beta);
        EXPECT_TRUE(r.consistent);
        EXPECT_TRUE(r.pass);
        EXPECT_LE(r.max_sum, 1.0 + 1e-9);
        // Oracle: Tr[(Q_a + Q_b + Q_d) rho] by direct products.
        const auto abd = projectors.at("a") + projectors.at("b") + projectors.at("d");
        const double direct = (abd * beta.matrix()).trace().real();
        const auto it = std::find_if(r.sums.begin(), r.sums.end(), [](const CliqueSum& c) { return c.clique == Labels{"a", "b", "d"}; });
        ASSERT_NE(it, r.sums.end());
        EXPECT_NEAR(it->sum, direct, 1e-12);
    }
}

TEST(Witness, ResolutionOfIdentity) {
    const Scenario s({"x", "y"}, {{"x", "y"}});
    const std::map<std::string, ComplexMatrix> q{{"x", ComplexMatrix::diagonal({1, 0})}, {"y", ComplexMatrix::diagonal({0, 1})}};
    const auto r = quantum_witness_check(s, q, DensityBelief::maximally_mixed(2));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.max_sum, 1.0, 1e-15);
}

TEST(Witness, NonOrthogonalEdgeIsRejected) {
    const Scenario s({"x", "y"}, {{"x", "y"}});
    const auto plus = ComplexMatrix::outer(gbt::testing::plus_state());
    const std::map<std::string, ComplexMatrix> q{{"x", ComplexMatrix::diagonal({1, 0})}, {"y", plus}};
    const auto r = quantum_witness_check(s, q, DensityBelief::maximally_mixed(2));
    EXPECT_FALSE(r.consistent);
    EXPECT_FALSE(r.pass);
    ASSERT_EQ(r.non_orthogonal.size(), 1u);
    EXPECT_THROW(quantum_witness_check(s, {{"x", ComplexMatrix::diagonal({1, 0})}}, DensityBelief::maximally_mixed(2)),
                 gbt::StructuralError);
    EXPECT_THROW(quantum_witness_check(s, {{"x", ComplexMatrix::diagonal({0.5, 0})}, {"y", plus}},
                                       DensityBelief::maximally_mixed(2)),
                 gbt::DomainError);
}

}  // namespace
