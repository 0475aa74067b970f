#pragma once

#include <json.hpp>

#include "vlab/classify.hpp"

namespace vlab {

// Shared wire formats. Rationals travel as exact strings "p" or "p/q";
// polytopes as {"dim": n, "vertices": [["p/q", ...], ...]}; linear maps as
// {"entries": [[...], ...]}; matrix values row-major as nested arrays.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Polytope& p);
nlohmann::json to_json(const LinearMap& phi);
nlohmann::json to_json(const Value& value);
nlohmann::json to_json(const Counterexample& cex);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const FitResult& fit);

Rational rational_from_json(const nlohmann::json& j);
Vector vector_from_json(const nlohmann::json& j);
Matrix matrix_from_json(const nlohmann::json& j);
Polytope polytope_from_json(const nlohmann::json& j);
LinearMap linear_map_from_json(const nlohmann::json& j);

/// Parses text and runs it through the same validation as the typed readers.
Polytope polytope_from_text(const std::string& text);

} // namespace vlab
