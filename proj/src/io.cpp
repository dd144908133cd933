#include "frecheb/io.hpp"

#include <vector>

namespace frecheb {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw DocumentError(path + ": " + what);
}

const json& field(const json& doc, const char* key) {
    if (!doc.is_object()) fail("<document>", "expected a JSON object");
    const auto it = doc.find(key);
    if (it == doc.end()) fail(key, "missing field");
    return *it;
}

double unit_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number, got " + std::string(v.type_name()));
    const double x = v.get<double>();
    if (!(x >= 0.0 && x <= 1.0)) fail(path, "value " + v.dump() + " outside [0,1]");
    return x;
}

std::vector<double> unit_array(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array");
    if (v.empty()) fail(path, "must not be empty");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        out.push_back(unit_number(v[k], path + "[" + std::to_string(k) + "]"));
    return out;
}

UnitMatrix unit_matrix(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of rows");
    if (v.empty()) fail(path, "must have at least one row");
    std::vector<double> flat;
    std::size_t cols = 0;
    for (std::size_t r = 0; r < v.size(); ++r) {
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        auto row = unit_array(v[r], row_path);
        if (r == 0) cols = row.size();
        if (row.size() != cols) {
            fail(row_path, "has " + std::to_string(row.size()) + " entries, expected " +
                               std::to_string(cols));
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return UnitMatrix(v.size(), cols, std::move(flat));
}

ImplicationKind implication_field(const json& doc) {
    const json& tag = field(doc, "implication");
    if (!tag.is_string()) fail("implication", "expected a string");
    try {
        return parse_implication(tag.get<std::string>());
    } catch (const DomainError& e) {
        fail("implication", e.what());
    }
}

std::optional<std::string> name_field(const json& doc) {
    const auto it = doc.find("name");
    if (it == doc.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) fail("name", "expected a string");
    return it->get<std::string>();
}

json vector_json(const UnitVector& v) {
    return json(std::vector<double>(v.begin(), v.end()));
}

}  // namespace

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("<document>: invalid JSON: ") + e.what());
    }
}

SystemDocument parse_system_document(const json& doc) {
    const ImplicationKind kind = implication_field(doc);
    UnitMatrix gamma = unit_matrix(field(doc, "gamma"), "gamma");
    UnitVector beta(unit_array(field(doc, "beta"), "beta"));
    if (beta.size() != gamma.rows()) {
        fail("beta", "has " + std::to_string(beta.size()) + " entries but gamma has " +
                         std::to_string(gamma.rows()) + " rows");
    }
    return {name_field(doc), FuzzySystem(std::move(gamma), std::move(beta), kind)};
}

MaxTDocument parse_maxt_document(const json& doc) {
    const ImplicationKind kind = implication_field(doc);
    UnitMatrix a = unit_matrix(field(doc, "a"), "a");
    UnitVector b(unit_array(field(doc, "b"), "b"));
    if (b.size() != a.rows()) {
        fail("b", "has " + std::to_string(b.size()) + " entries but a has " +
                      std::to_string(a.rows()) + " rows");
    }
    return {name_field(doc), MaxTSystem(std::move(a), std::move(b), kind)};
}

json to_json(const SystemDocument& doc) {
    const auto& sys = doc.system;
    json gamma = json::array();
    for (std::size_t r = 0; r < sys.m(); ++r) {
        const auto row = sys.gamma.row(r);
        gamma.push_back(std::vector<double>(row.begin(), row.end()));
    }
    json out{{"implication", to_string(sys.kind)}, {"gamma", gamma}, {"beta", vector_json(sys.beta)}};
    if (doc.name) out["name"] = *doc.name;
    return out;
}

json to_json(const ConsistencyResult& c) {
    return {{"consistent", c.consistent}, {"residual", c.residual}, {"epsilon", vector_json(c.epsilon)}};
}

json to_json(const ChebyshevReport& report) {
    json rows = json::array();
    for (std::size_t j = 0; j < report.rows.size(); ++j) {
        const RowDiagnostics& r = report.rows[j];
        json cells = json::array();
        for (std::size_t i = 0; i < r.cells.size(); ++i) {
            const CellStats& c = r.cells[i];
            json cell{{"i", i + 1}, {"zeta", c.zeta}, {"support", c.support}};
            if (c.theta) cell["theta"] = *c.theta;
            cells.push_back(std::move(cell));
        }
        json row{{"j", j + 1},
                 {"nabla_j", r.nabla},
                 {"tau_j", r.tau},
                 {"one_minus_beta", r.one_minus_beta},
                 {"attainable", r.attainable},
                 {"argmin_i", r.argmin_i ? json(*r.argmin_i + 1) : json(nullptr)},
                 {"borderline", r.borderline},
                 {"cells", std::move(cells)}};
        if (r.nabla_tilde) row["nabla_tilde_j"] = *r.nabla_tilde;
        rows.push_back(std::move(row));
    }
    return {{"implication", to_string(report.kind)},
            {"nabla", report.nabla},
            {"verdict", to_string(report.verdict)},
            {"borderline", report.borderline()},
            {"per_row", std::move(rows)}};
}

json to_json(const ApproximationResult& a) {
    if (a.status == ApproximationStatus::ApproximationSetEmpty) {
        return {{"empty", true}, {"status", to_string(a.status)}};
    }
    return {{"empty", false},
            {"status", to_string(a.status)},
            {"vector", vector_json(*a.lowest_approximation)},
            {"solution", vector_json(*a.approximate_solution)},
            {"distance", *a.achieved_distance}};
}

json to_json(const NearApproximation& a) {
    return {{"delta", a.delta},
            {"vector", vector_json(a.approximation)},
            {"solution", vector_json(a.solution)},
            {"distance", a.achieved_distance},
            {"optimal", false}};
}

}  // namespace frecheb
