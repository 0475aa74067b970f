#include "vlab/json_io.hpp"

#include "vlab/errors.hpp"

namespace vlab {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vector& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(c.str());
    return arr;
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Polytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(to_json(v));
    return json{{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

json to_json(const LinearMap& phi) { return json{{"entries", to_json(phi.entries())}}; }

json to_json(const Value& value) {
    switch (value.kind()) {
        case ValueKind::scalar: return to_json(value.scalar());
        case ValueKind::vector: return to_json(value.vector());
        case ValueKind::matrix: return to_json(value.matrix());
    }
    fail(ErrorCode::invalid_configuration, "unreachable");
}

json to_json(const Counterexample& cex) {
    json j{{"law", cex.law}, {"trial", cex.trial}};
    if (!cex.polytopes.empty()) {
        json ps = json::object();
        for (const auto& [name, p] : cex.polytopes) ps[name] = to_json(p);
        j["polytopes"] = std::move(ps);
    }
    if (!cex.scalars.empty()) {
        json ss = json::object();
        for (const auto& [name, r] : cex.scalars) ss[name] = r.str();
        j["scalars"] = std::move(ss);
    }
    if (!cex.vectors.empty()) {
        json vs = json::object();
        for (const auto& [name, v] : cex.vectors) vs[name] = to_json(v);
        j["vectors"] = std::move(vs);
    }
    if (cex.map) j["map"] = to_json(*cex.map);
    if (cex.lhs) j["lhs"] = to_json(*cex.lhs);
    if (cex.rhs) j["rhs"] = to_json(*cex.rhs);
    return j;
}

json to_json(const CheckReport& report) {
    json j{{"passed", report.passed}, {"trials", report.trials}, {"seed", report.seed}};
    j["counterexample"] = report.counterexample ? to_json(*report.counterexample) : json(nullptr);
    return j;
}

json to_json(const FitResult& fit) {
    json coeffs = json::array();
    for (const auto& k : fit.coefficients) coeffs.push_back(k.str());
    json failures = json::array();
    for (const auto& p : fit.holdout_failures) failures.push_back(to_json(p));
    return json{{"coefficients", std::move(coeffs)},
                {"residual_ok", fit.residual_ok},
                {"holdout_failures", std::move(failures)}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(ErrorCode::parse_error, "rational must be a string like \"p/q\"");
    return Rational::from_string(j.get<std::string>());
}

Vector vector_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::parse_error, "vector must be an array of rationals");
    Vector v;
    v.reserve(j.size());
    for (const auto& c : j) v.push_back(rational_from_json(c));
    return v;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) fail(ErrorCode::parse_error, "matrix must be an array of rows");
    std::vector<Vector> rows;
    rows.reserve(j.size());
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    return Matrix::from_rows(rows);
}

Polytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        fail(ErrorCode::parse_error, "polytope needs {\"dim\", \"vertices\"}");
    if (!j["dim"].is_number_integer()) fail(ErrorCode::parse_error, "polytope dim must be an integer");
    const int dim = j["dim"].get<int>();
    if (dim < 1) fail(ErrorCode::parse_error, "polytope dim must be positive");
    if (!j["vertices"].is_array()) fail(ErrorCode::parse_error, "polytope vertices must be an array");
    std::vector<Vector> pts;
    pts.reserve(j["vertices"].size());
    for (const auto& v : j["vertices"]) pts.push_back(vector_from_json(v));
    return Polytope::from_points(dim, pts);
}

LinearMap linear_map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries"))
        fail(ErrorCode::parse_error, "linear map needs {\"entries\"}");
    return LinearMap(matrix_from_json(j["entries"]));
}

Polytope polytope_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
    }
    return polytope_from_json(j);
}

} // namespace vlab
