#include "gbt/cli/cli.hpp"
#include "gbt/cli/json_io.hpp"
#include "gbt/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

using gbt::testing::data_path;
using Args = std::vector<std::string>;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const Args& args) {
    std::ostringstream out, err;
    const int code = gbt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(Args args) {
    args.push_back("--format");
    args.push_back("json");
    return nlohmann::json::parse(run(args).out);
}

TEST(Cli, EpCheckFigure1) {
    const auto r = run({"ep-check", "--builtin", "figure1"});
    EXPECT_EQ(r.code, gbt::cli::kExitClaimFailed);
    EXPECT_NE(r.out.find("VIOLATION {a,b,d} sum=5/4 = 1.25 > 1"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("normalization ok"), std::string::npos);
}

TEST(Cli, EpCheckUniformAssignmentPasses) {
    const auto r = run({"ep-check", "--scenario", data_path("scenarios/figure1.json"), "--assignment",
                        data_path("scenarios/figure1_uniform.json")});
    EXPECT_EQ(r.code, gbt::cli::kExitPass) << r.out << r.err;
}

TEST(Cli, CheckAxioms) {
    const auto j = run_json({"check-axioms", "--dim", "2", "--trials", "50", "--seed", "7"});
    EXPECT_EQ(j["exit_code"], 0);
    for (const auto& a : j["result"]) {
        EXPECT_LE(a["max_residual"].get<double>(), 1e-9) << a["axiom"];
    }
}

TEST(Cli, OneTrialCanBeInconclusive) {
    EXPECT_EQ(run({"check-axioms", "--trials", "1", "--seed", "3"}).code, gbt::cli::kExitInconclusive);
}

TEST(Cli, ClassifyTrineFixture) {
    const auto r = run({"classify-instrument", "--in", data_path("instruments/trine.json"), "--format", "json"});
    EXPECT_EQ(r.code, gbt::cli::kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["result"]["classification"]["class"], "non_projective");
    EXPECT_EQ(run({"classify-instrument", "--builtin", "trine"}).code, gbt::cli::kExitPass);
    EXPECT_EQ(run({"classify-instrument", "--in", data_path("instruments/luders_qubit.json")}).code, gbt::cli::kExitPass);
}

TEST(Cli, VerifyTheoremsModes) {
    for (const std::string which : {"t1", "corollary", "appC", "t2", "lemma5"}) {
        const auto r = run({"verify-theorems", "--which", which, "--dim", "2", "--trials", "8", "--refinements", "4"});
        EXPECT_EQ(r.code, gbt::cli::kExitPass) << which << "\n" << r.out << r.err;
    }
    EXPECT_EQ(run({"verify-theorems", "--which", "t9"}).code, gbt::cli::kExitInputError);
}

TEST(Cli, FilterRun) {
    const auto r = run({"filter-run", "--outcomes", data_path("outcomes/qubit_basis.json"), "--belief",
                        data_path("beliefs/diag_03_07.json"), "--format", "json"});
    EXPECT_EQ(r.code, gbt::cli::kExitPass) << r.err;
    const auto q = nlohmann::json::parse(r.out)["result"]["q"];
    ASSERT_EQ(q.size(), 3u);
    EXPECT_NEAR(q[0].get<double>(), 0.3, 1e-12);
    EXPECT_NEAR(q[1].get<double>(), 0.7, 1e-12);

    const auto bad = run({"filter-run", "--outcomes", data_path("outcomes/non_exclusive.json"), "--belief",
                          data_path("beliefs/diag_03_07.json")});
    EXPECT_EQ(bad.code, gbt::cli::kExitInputError);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({}).code, gbt::cli::kExitInputError);
    EXPECT_EQ(run({"frobnicate"}).code, gbt::cli::kExitInputError);
    EXPECT_EQ(run({"check-axioms", "--dim", "1"}).code, gbt::cli::kExitInputError);
    EXPECT_EQ(run({"check-axioms", "--dim", "9"}).code, gbt::cli::kExitInputError);
    EXPECT_EQ(run({"check-axioms", "--trials", "0"}).code, gbt::cli::kExitInputError);
    EXPECT_EQ(run({"check-axioms", "--format", "xml"}).code, gbt::cli::kExitInputError);
    EXPECT_EQ(run({"ep-check"}).code, gbt::cli::kExitInputError);
    EXPECT_EQ(run({"ep-check", "--builtin", "nope"}).code, gbt::cli::kExitInputError);
    EXPECT_EQ(run({"ep-check", "--scenario", data_path("scenarios/does_not_exist.json")}).code, gbt::cli::kExitInputError);
}

TEST(Cli, MalformedJsonHasPosition) {
    const auto r = run({"ep-check", "--scenario", data_path("scenarios/malformed.json")});
    EXPECT_EQ(r.code, gbt::cli::kExitInputError);
    EXPECT_NE(r.err.find("malformed.json:4:1:"), std::string::npos) << r.err;
}

TEST(Cli, EnvelopeCarriesProvenance) {
    const auto j = run_json({"check-axioms", "--dim", "2", "--trials", "5", "--seed", "11"});
    EXPECT_EQ(j["command"], "check-axioms");
    EXPECT_EQ(j["seed"], 11);
    EXPECT_EQ(j["config"]["dim"], 2);
    EXPECT_EQ(j["tool_version"], gbt::cli::tool_version());
}

TEST(Cli, SameSeedSameBytes) {
    const std::vector<Args> commands{
        {"check-axioms", "--dim", "3", "--trials", "20", "--seed", "5"},
        {"verify-theorems", "--which", "t1", "--dim", "3", "--trials", "10", "--seed", "5"},
        {"verify-theorems", "--which", "appC", "--dim", "2", "--trials", "4", "--refinements", "3", "--seed", "5"},
        {"verify-theorems", "--which", "t2", "--dim", "3", "--trials", "20", "--seed", "5"},
        {"classify-instrument", "--builtin", "trine", "--seed", "5"},
        {"ep-check", "--builtin", "kcbs"},
    };
    for (auto args : commands) {
        args.push_back("--format");
        args.push_back("json");
        const auto a = run(args);
        const auto b = run(args);
        EXPECT_EQ(a.out, b.out) << args.front();
        EXPECT_FALSE(a.out.empty());
    }
    const auto s5 = run({"check-axioms", "--trials", "20", "--seed", "5", "--format", "json"});
    const auto s6 = run({"check-axioms", "--trials", "20", "--seed", "6", "--format", "json"});
    EXPECT_NE(s5.out, s6.out);
}

TEST(JsonIo, ParseErrorsNameSource) {
    try {
        gbt::cli::parse_json_text("{\n  \"a\": [1,\n}", "inline");
        FAIL() << "expected an InputError";
    } catch (const gbt::cli::InputError& e) {
        EXPECT_NE(std::string(e.what()).find("inline:3:1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(gbt::cli::load_json_file("/nonexistent/x.json"), gbt::cli::InputError);
}

TEST(JsonIo, Outcomes) {
    const auto outcomes = gbt::cli::outcomes_from_json(gbt::cli::load_json_file(data_path("outcomes/dressed_qubit.json")));
    ASSERT_FALSE(outcomes.empty());
    for (const auto& o : outcomes) EXPECT_TRUE(o.has_projector_effect());
    EXPECT_THROW(gbt::cli::outcomes_from_json(nlohmann::json{{"dim", 2}}), gbt::StructuralError);
}

}  // namespace
