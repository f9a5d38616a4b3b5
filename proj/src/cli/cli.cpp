#include "gbt/cli/cli.hpp"

#include "gbt/cli/commands.hpp"
#include "gbt/cli/json_io.hpp"
#include "gbt/errors.hpp"

#include <CLI11.hpp>

#include <exception>
#include <ostream>

#ifndef GBT_VERSION
#define GBT_VERSION "0.0.0"
#endif

namespace gbt::cli {

void RunConfig::validate() const {
    if (dim < 2 || dim > 8) throw InputError("--dim must be in 2..8");
    if (trials < 1) throw InputError("--trials must be >= 1");
    if (!(tol > 0.0) || tol >= 1e-3) throw InputError("--tol must be in (0, 1e-3)");
    if (format != "text" && format != "json") throw InputError("--format must be text or json");
}

nlohmann::json RunConfig::to_json() const {
    return {{"dim", dim}, {"trials", trials}, {"seed", seed}, {"tol", tol}, {"format", format}};
}

const char* tool_version() noexcept { return GBT_VERSION; }

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--dim", cfg.dim, "Hilbert space dimension (2-8)")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "Number of seeded trials")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Base seed; trial k uses an independent stream")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "Residual tolerance")->capture_default_str();
    sub->add_option("--format", cfg.format, "Report format: text or json")->capture_default_str();
}

void emit(const std::string& command, const RunConfig& cfg, const nlohmann::json& args, const CommandOutput& result,
          std::ostream& out) {
    if (cfg.format == "json") {
        const nlohmann::json report{{"command", command},     {"config", cfg.to_json()},
                                    {"args", args},           {"tool_version", tool_version()},
                                    {"seed", cfg.seed},       {"result", result.result},
                                    {"exit_code", result.exit_code}};
        out << report.dump(2) << '\n';
        return;
    }
    out << "gbt-verify " << command << " (version " << tool_version() << ", seed " << cfg.seed << ")\n";
    for (const auto& line : result.text) out << line << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checks belief-update axioms, ideal experiments and the exclusivity principle", "gbt-verify"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version()));

    RunConfig cfg;
    std::string in_file, builtin, which = "t1", outcomes_file, belief_file, scenario_file, assignment_file;
    std::size_t refinements = 100;

    auto* axioms = app.add_subcommand("check-axioms", "Sample the quantum model and check the three axioms");
    add_common(axioms, cfg);

    auto* classify = app.add_subcommand("classify-instrument", "Decide whether an instrument is a projective measurement");
    add_common(classify, cfg);
    classify->add_option("--in", in_file, "Instrument JSON {branches: [[matrix...]...]}")->check(CLI::ExistingFile);
    classify->add_option("--builtin", builtin, "Built-in instrument: trine");

    auto* theorems = app.add_subcommand("verify-theorems", "Run one of the theorem verification sweeps");
    add_common(theorems, cfg);
    theorems->add_option("--which", which, "t1, corollary, appC, t2 or lemma5")
        ->check(CLI::IsMember({"t1", "corollary", "appC", "t2", "lemma5"}))
        ->capture_default_str();
    theorems->add_option("--refinements", refinements, "Refinements per instrument for appC")->capture_default_str();

    auto* filter = app.add_subcommand("filter-run", "Run the sequential filter procedure on exclusive outcomes");
    add_common(filter, cfg);
    filter->add_option("--outcomes", outcomes_file, "Outcomes JSON")->required()->check(CLI::ExistingFile);
    filter->add_option("--belief", belief_file, "Belief JSON (density matrix)")->required()->check(CLI::ExistingFile);

    auto* ep = app.add_subcommand("ep-check", "Validate a scenario and list exclusivity violations");
    add_common(ep, cfg);
    ep->add_option("--scenario", scenario_file, "Scenario JSON")->check(CLI::ExistingFile);
    ep->add_option("--assignment", assignment_file, "Assignment JSON overriding the scenario's")->check(CLI::ExistingFile);
    ep->add_option("--builtin", builtin, "Built-in scenario: figure1, kcbs or disjoint");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitInputError;
    }

    try {
        cfg.validate();
        CLI::App* sub = app.get_subcommands().front();
        const std::string command = sub->get_name();
        CommandOutput result;
        nlohmann::json extra = nlohmann::json::object();
        if (sub == axioms) {
            result = check_axioms_command(cfg);
        } else if (sub == classify) {
            extra = {{"in", in_file}, {"builtin", builtin}};
            result = classify_instrument_command(cfg, in_file, builtin);
        } else if (sub == theorems) {
            extra = {{"which", which}, {"refinements", refinements}};
            result = verify_theorems_command(cfg, which, refinements);
        } else if (sub == filter) {
            extra = {{"outcomes", outcomes_file}, {"belief", belief_file}};
            result = filter_run_command(cfg, outcomes_file, belief_file);
        } else {
            extra = {{"scenario", scenario_file}, {"assignment", assignment_file}, {"builtin", builtin}};
            result = ep_check_command(cfg, scenario_file, assignment_file, builtin);
        }
        emit(command, cfg, extra, result, out);
        return result.exit_code;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInputError;
}

}  // namespace gbt::cli
