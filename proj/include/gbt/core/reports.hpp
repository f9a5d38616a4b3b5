#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gbt {

enum class Verdict { Pass, Fail, Inconclusive, Rejected };

std::string_view verdict_name(Verdict v) noexcept;

// Pass when at least one trial was applicable and every residual stayed
// within tol; Inconclusive when nothing was applicable.
Verdict verdict_from(std::size_t applicable, double max_residual, double tol) noexcept;

struct Counterexample {
    std::size_t trial = 0;
    std::string where;
    double residual = 0.0;
};

// Outcome of checking one mathematical claim over sampled trials.
struct ClaimReport {
    std::string claim;
    std::size_t trials = 0;
    std::size_t applicable = 0;
    double max_residual = 0.0;
    double tol = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Counterexample> counterexample;
    std::string note;

    static ClaimReport start(std::string name, std::size_t trials, double tol) {
        ClaimReport r;
        r.claim = std::move(name);
        r.trials = trials;
        r.tol = tol;
        return r;
    }

    bool passed() const noexcept { return verdict == Verdict::Pass; }

    // Records a residual; keeps the worst one as counterexample when it exceeds tol.
    void observe(std::size_t trial, double residual, std::string_view where);
    // Sets the verdict from the accumulated counts.
    void finish();
};

// Several claims checked together; passes when every claim passes.
struct TheoremReport {
    std::string theorem;
    std::vector<ClaimReport> claims;

    Verdict verdict() const;
    bool passed() const { return verdict() == Verdict::Pass; }
    const ClaimReport& claim(const std::string& name) const;
};

nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const ClaimReport& r);
nlohmann::json to_json(const TheoremReport& r);

}  // namespace gbt
