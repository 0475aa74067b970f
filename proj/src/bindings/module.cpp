// Python bindings for the exact valuation toolkit. Rationals cross the
// boundary as exact strings; reports and fits as plain dicts/lists mirroring
// the CLI JSON schemas.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vlab/errors.hpp"
#include "vlab/json_io.hpp"

namespace py = pybind11;

namespace {

using nlohmann::json;

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

vlab::Rational rat(const std::string& text) { return vlab::Rational::from_string(text); }

vlab::Vector vec(const std::vector<std::string>& coords) {
    vlab::Vector v;
    v.reserve(coords.size());
    for (const auto& c : coords) v.push_back(rat(c));
    return v;
}

std::vector<std::string> vec_out(const vlab::Vector& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

vlab::Polytope polytope_from_vertices(int dim, const std::vector<std::vector<std::string>>& verts) {
    std::vector<vlab::Vector> pts;
    pts.reserve(verts.size());
    for (const auto& v : verts) pts.push_back(vec(v));
    return vlab::Polytope::from_points(dim, pts);
}

vlab::LinearMap map_from_entries(const std::vector<std::vector<std::string>>& entries) {
    std::vector<vlab::Vector> rows;
    rows.reserve(entries.size());
    for (const auto& r : entries) rows.push_back(vec(r));
    return vlab::LinearMap(vlab::Matrix::from_rows(rows));
}

vlab::TrialBudget budget_of(long trials, int dim, long bound, std::uint64_t seed) {
    return {trials, dim, bound, seed};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact rational convex-polytope valuations: kernel, checks and fits";

    py::register_exception<vlab::Error>(m, "VlabError");

    py::class_<vlab::Polytope>(m, "Polytope")
        .def_static("from_vertices", &polytope_from_vertices, py::arg("dim"), py::arg("vertices"))
        .def_static("from_json", &vlab::polytope_from_text, py::arg("text"))
        .def_property_readonly("dim", &vlab::Polytope::dim)
        .def_property_readonly("vertices",
                               [](const vlab::Polytope& p) {
                                   std::vector<std::vector<std::string>> out;
                                   for (const auto& v : p.vertices()) out.push_back(vec_out(v));
                                   return out;
                               })
        .def("to_json", [](const vlab::Polytope& p) { return vlab::to_json(p).dump(); })
        .def("__eq__", [](const vlab::Polytope& a, const vlab::Polytope& b) { return a == b; })
        .def("__repr__", [](const vlab::Polytope& p) {
            return "Polytope(" + vlab::to_json(p).dump() + ")";
        });

    m.def("cube", [](int dim, const std::string& scale) { return vlab::make_cube(dim, rat(scale)); },
          py::arg("dim"), py::arg("scale") = "1");
    m.def("cross_polytope",
          [](int dim, const std::string& scale) { return vlab::make_cross_polytope(dim, rat(scale)); },
          py::arg("dim"), py::arg("scale") = "1");
    m.def("double_pyramid",
          [](const vlab::Polytope& base, const std::string& c, const std::string& d,
             const std::vector<std::string>& x, const std::vector<std::string>& y) {
              auto params = vlab::DoublePyramidParams::over_base(base, rat(c), rat(d), vec(x), vec(y));
              return vlab::make_double_pyramid(params);
          },
          py::arg("base"), py::arg("c"), py::arg("d"), py::arg("x"), py::arg("y"));
    m.def("is_double_pyramid",
          [](const vlab::Polytope& base, const std::string& c, const std::string& d,
             const std::vector<std::string>& x, const std::vector<std::string>& y) {
              return vlab::is_double_pyramid(
                  vlab::DoublePyramidParams::over_base(base, rat(c), rat(d), vec(x), vec(y)));
          },
          py::arg("base"), py::arg("c"), py::arg("d"), py::arg("x"), py::arg("y"));
    m.def("random_polytope",
          [](int dim, std::uint64_t seed, long coeff_bound, long trial) {
              return vlab::random_polytope(budget_of(1, dim, coeff_bound, seed), trial);
          },
          py::arg("dim"), py::arg("seed") = 0, py::arg("coeff_bound") = 4, py::arg("trial") = 1);

    m.def("convex_hull", &polytope_from_vertices, py::arg("dim"), py::arg("vertices"));
    m.def("polar", &vlab::polar, py::arg("p"));
    m.def("intersect", &vlab::intersect, py::arg("p"), py::arg("q"));
    m.def("union_if_convex", &vlab::union_if_convex, py::arg("p"), py::arg("q"));
    m.def("apply_linear_map",
          [](const std::vector<std::vector<std::string>>& entries, const vlab::Polytope& p) {
              return vlab::apply_linear_map(map_from_entries(entries), p);
          },
          py::arg("entries"), py::arg("p"));
    m.def("contains_origin_interior", &vlab::contains_origin_interior, py::arg("p"));

    m.def("volume", [](const vlab::Polytope& p) { return vlab::volume(p).str(); }, py::arg("p"));
    m.def("euler_characteristic",
          [](const vlab::Polytope& p) { return vlab::euler_characteristic(p).str(); }, py::arg("p"));
    m.def("moment_vector", [](const vlab::Polytope& p) { return vec_out(vlab::moment_vector(p)); },
          py::arg("p"));
    m.def("moment_matrix",
          [](const vlab::Polytope& p) {
              const vlab::Matrix m2 = vlab::moment_matrix(p);
              std::vector<std::vector<std::string>> out;
              for (int i = 0; i < m2.rows(); ++i) out.push_back(vec_out(m2.row(i)));
              return out;
          },
          py::arg("p"));
    m.def("evaluate",
          [](const std::string& mu, const vlab::Polytope& p) {
              return json_to_py(vlab::to_json(vlab::parse_mu_expression(mu).evaluate(p)));
          },
          py::arg("mu"), py::arg("p"), "Evaluate a valuation expression, e.g. '2*m-5*rot-polar-m'");

    m.def("check_valuation_identity",
          [](const std::string& mu, int dim, long trials, std::uint64_t seed, long bound) {
              return json_to_py(vlab::to_json(vlab::check_valuation_identity(
                  vlab::parse_mu_expression(mu), budget_of(trials, dim, bound, seed))));
          },
          py::arg("mu"), py::arg("dim") = 2, py::arg("trials") = 100, py::arg("seed") = 0,
          py::arg("coeff_bound") = 4);
    m.def("check_equivariance",
          [](const std::string& mu, const std::string& mode, int dim, long trials,
             std::uint64_t seed, long bound) {
              return json_to_py(vlab::to_json(vlab::check_equivariance(
                  vlab::parse_mu_expression(mu), vlab::equivariance_mode_from_string(mode),
                  budget_of(trials, dim, bound, seed))));
          },
          py::arg("mu"), py::arg("mode"), py::arg("dim") = 2, py::arg("trials") = 100,
          py::arg("seed") = 0, py::arg("coeff_bound") = 4);
    m.def("check_homogeneity",
          [](const std::string& mu, const std::string& degree, int dim, long trials,
             std::uint64_t seed, long bound) {
              return json_to_py(vlab::to_json(vlab::check_homogeneity(
                  vlab::parse_mu_expression(mu), rat(degree), budget_of(trials, dim, bound, seed))));
          },
          py::arg("mu"), py::arg("degree"), py::arg("dim") = 2, py::arg("trials") = 100,
          py::arg("seed") = 0, py::arg("coeff_bound") = 4);

    m.def("fit_scalar",
          [](const std::string& mu, int dim, long holdout, std::uint64_t seed) {
              return json_to_py(vlab::to_json(vlab::fit_scalar_classification(
                  vlab::parse_mu_expression(mu), vlab::default_scalar_train(dim),
                  vlab::random_holdout(budget_of(holdout, dim, 3, seed), holdout))));
          },
          py::arg("mu"), py::arg("dim") = 2, py::arg("holdout") = 20, py::arg("seed") = 0);
    m.def("fit_vector",
          [](const std::string& mu, int dim, long holdout, std::uint64_t seed) {
              return json_to_py(vlab::to_json(vlab::fit_vector_classification(
                  vlab::parse_mu_expression(mu), dim, vlab::default_vector_train(dim),
                  vlab::random_holdout(budget_of(holdout, dim, 3, seed), holdout))));
          },
          py::arg("mu"), py::arg("dim") = 2, py::arg("holdout") = 20, py::arg("seed") = 0);
    m.def("fit_matrix",
          [](const std::string& mu, int dim, long holdout, std::uint64_t seed) {
              return json_to_py(vlab::to_json(vlab::fit_matrix_classification(
                  vlab::parse_mu_expression(mu), vlab::default_matrix_train(dim),
                  vlab::random_holdout(budget_of(holdout, dim, 3, seed), holdout))));
          },
          py::arg("mu"), py::arg("dim") = 2, py::arg("holdout") = 20, py::arg("seed") = 0);
    m.def("verify_r2_against_moment",
          [](long trials, std::uint64_t seed) {
              return json_to_py(vlab::to_json(vlab::verify_R2_against_moment(
                  budget_of(trials, 2, 3, seed))));
          },
          py::arg("trials") = 50, py::arg("seed") = 0);
}
