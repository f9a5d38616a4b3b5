#include "gbt/cli/json_io.hpp"

#include "gbt/quantum/matrix_json.hpp"

#include <fstream>
#include <sstream>

namespace gbt::cli {

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    // nlohmann reports the 1-based count of bytes read, including the bad one.
    const std::size_t end = std::min(text.size(), byte == 0 ? 0 : byte - 1);
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::vector<quantum::ComplexMatrix> matrix_list(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw StructuralError(where + ": expected a nonempty list of matrices");
    std::vector<quantum::ComplexMatrix> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(quantum::matrix_from_json(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

}  // namespace

nlohmann::json parse_json_text(std::string_view text, const std::string& source) {
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte);
        std::string msg = e.what();
        if (const auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

quantum::DensityBelief belief_from_json(const nlohmann::json& j) {
    const nlohmann::json& m = j.is_object() && j.contains("belief") ? j["belief"] : j;
    return quantum::DensityBelief(quantum::matrix_from_json(m, "belief"));
}

std::vector<exclusivity::IdealOutcome> outcomes_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
        throw StructuralError("outcomes.dim: expected a positive integer");
    }
    const auto dim = j["dim"].get<long long>();
    if (dim < 1 || dim > 64) throw StructuralError("outcomes.dim: must be in 1..64");
    if (!j.contains("outcomes") || !j["outcomes"].is_array()) throw StructuralError("outcomes.outcomes: expected a list");
    const auto d = static_cast<std::size_t>(dim);
    const SampleSpace space(d);
    std::vector<exclusivity::IdealOutcome> out;
    const auto& arr = j["outcomes"];
    for (std::size_t n = 0; n < arr.size(); ++n) {
        const std::string where = "outcomes[" + std::to_string(n) + "]";
        const auto& o = arr[n];
        if (!o.is_object() || !o.contains("event") || !o["event"].is_array()) {
            throw StructuralError(where + ".event: expected a list of sample points");
        }
        std::vector<std::size_t> members;
        for (const auto& x : o["event"]) {
            if (!x.is_number_integer() || x.get<long long>() < 0) throw StructuralError(where + ".event: entries must be nonnegative integers");
            members.push_back(x.get<std::size_t>());
        }
        const Event event(space, std::span<const std::size_t>(members));
        if (o.contains("unitary")) {
            out.push_back(exclusivity::IdealOutcome::dressed(quantum::matrix_from_json(o["unitary"], where + ".unitary"), event));
        } else if (o.contains("kraus")) {
            quantum::KrausChannel action(matrix_list(o["kraus"], where + ".kraus"));
            quantum::KrausChannel reversal = o.contains("reversal_kraus")
                                                 ? quantum::KrausChannel(matrix_list(o["reversal_kraus"], where + ".reversal_kraus"))
                                                 : quantum::KrausChannel::identity(d);
            out.emplace_back(std::move(action), event, std::move(reversal));
        } else {
            out.push_back(exclusivity::IdealOutcome::principal(event));
        }
    }
    return out;
}

}  // namespace gbt::cli
