#include "gbt/quantum/matrix_json.hpp"

#include "gbt/errors.hpp"

#include <string>

namespace gbt::quantum {

using linalg::Complex;

namespace {

void read_plane(const nlohmann::json& j, const std::string& where, std::size_t d, ComplexMatrix& m, bool imaginary) {
    if (!j.is_array() || j.size() != d) {
        throw StructuralError(where + ": expected " + std::to_string(d) + " rows");
    }
    for (std::size_t r = 0; r < d; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != d) {
            throw StructuralError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(d) + " numbers");
        }
        for (std::size_t c = 0; c < d; ++c) {
            if (!row[c].is_number()) {
                throw StructuralError(where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]: not a number");
            }
            const double v = row[c].get<double>();
            if (imaginary) {
                m.add_to(r, c, Complex(0.0, v));
            } else {
                m.add_to(r, c, v);
            }
        }
    }
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw StructuralError(where + ": expected an object {dim, re, im}");
    if (!j.contains("dim") || !j["dim"].is_number_integer()) throw StructuralError(where + ".dim: expected a positive integer");
    const auto d = j["dim"].get<long long>();
    if (d <= 0 || d > 64) throw StructuralError(where + ".dim: must be in 1..64");
    if (!j.contains("re")) throw StructuralError(where + ".re: missing");
    const auto n = static_cast<std::size_t>(d);
    ComplexMatrix m(n);
    read_plane(j["re"], where + ".re", n, m, false);
    if (j.contains("im")) read_plane(j["im"], where + ".im", n, m, true);
    return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            re_row.push_back(m.at(r, c).real());
            im_row.push_back(m.at(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

QuantumInstrument instrument_from_json(const nlohmann::json& j, const ToleranceConfig& tol) {
    if (!j.is_object() || !j.contains("branches") || !j["branches"].is_array()) {
        throw StructuralError("instrument: expected {\"branches\": [[matrix, ...], ...]}");
    }
    std::vector<QuantumInstrument::Branch> branches;
    const auto& arr = j["branches"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "branches[" + std::to_string(i) + "]";
        if (!arr[i].is_array()) throw StructuralError(where + ": expected a list of matrices");
        QuantumInstrument::Branch branch;
        for (std::size_t k = 0; k < arr[i].size(); ++k) {
            branch.push_back(matrix_from_json(arr[i][k], where + "[" + std::to_string(k) + "]"));
        }
        branches.push_back(std::move(branch));
    }
    return QuantumInstrument(std::move(branches), tol);
}

nlohmann::json instrument_to_json(const QuantumInstrument& inst) {
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& branch : inst.branches()) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& k : branch) b.push_back(matrix_to_json(k));
        branches.push_back(std::move(b));
    }
    return {{"branches", std::move(branches)}};
}

}  // namespace gbt::quantum
