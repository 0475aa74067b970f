// JSON command-line front end: compute / polar / generate / check / fit.
// One JSON document on stdout, human-readable summaries on stderr.
// Exit codes: 0 pass, 1 check or fit failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vlab/errors.hpp"
#include "vlab/json_io.hpp"

namespace {

using nlohmann::json;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) vlab::fail(vlab::ErrorCode::parse_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        vlab::fail(vlab::ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

vlab::Polytope load_polytope(const std::string& path) {
    return vlab::polytope_from_text(read_text(path));
}

std::vector<vlab::Polytope> load_polytope_list(const std::string& path) {
    const json j = parse_json_text(read_text(path));
    if (!j.is_array()) vlab::fail(vlab::ErrorCode::parse_error, "expected a JSON array of polytopes");
    std::vector<vlab::Polytope> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(vlab::polytope_from_json(item));
    return out;
}

vlab::Rational parse_rational(const std::string& text) { return vlab::Rational::from_string(text); }

vlab::Vector parse_vector(const std::string& text) {
    vlab::Vector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    return v;
}

int emit(const json& doc, int code, const std::string& summary) {
    std::cout << doc.dump() << "\n";
    if (!summary.empty()) std::cerr << summary << "\n";
    return code;
}

struct CheckOptions {
    std::string mu = "V";
    std::string mode = "sl_covariant";
    std::string parity = "even";
    std::string equation = "inhomogeneous";
    std::string k_text, ktilde_text;
    long q = 1;
    long g_power = 2;
    int dim = 2;
    long trials = 100;
    long coeff_bound = 4;
    std::uint64_t seed = 0;
};

int run_check(const std::string& what, const CheckOptions& opt) {
    const vlab::TrialBudget budget{opt.trials, opt.dim, opt.coeff_bound, opt.seed};
    vlab::CheckReport report;
    if (what == "valuation") {
        report = vlab::check_valuation_identity(vlab::parse_mu_expression(opt.mu), budget);
    } else if (what == "equivariance") {
        report = vlab::check_equivariance(vlab::parse_mu_expression(opt.mu),
                                          vlab::equivariance_mode_from_string(opt.mode), budget);
    } else if (what == "functional-eq") {
        if (opt.equation == "homogeneous") {
            const long p = opt.g_power;
            report = vlab::check_homogeneous_solution(
                [p](const vlab::Rational& u) { return u.pow_int(p); }, budget);
        } else if (opt.equation == "inhomogeneous") {
            vlab::Rational k, ktilde;
            if (!opt.k_text.empty() && !opt.ktilde_text.empty()) {
                k = parse_rational(opt.k_text);
                ktilde = parse_rational(opt.ktilde_text);
            } else {
                // Solve F(r) = k r^2 + ktilde from the moment-derived F at r = 1, 2.
                const vlab::Rational f1 = vlab::extract_F_from_moment(1);
                const vlab::Rational f2 = vlab::extract_F_from_moment(2);
                k = (f2 - f1) / vlab::Rational(3);
                ktilde = f1 - k;
            }
            report = vlab::check_inhomogeneous_functional_eq(k, ktilde, budget);
        } else {
            vlab::fail(vlab::ErrorCode::parse_error, "unknown equation '" + opt.equation + "'");
        }
    } else if (what == "dim1") {
        if (opt.parity == "even") {
            report = vlab::dim1_even_representation(vlab::dim1_power_family(true, opt.q), budget, opt.q);
        } else if (opt.parity == "odd") {
            const vlab::Dim1Valuation family =
                opt.q == 0 ? vlab::dim1_dyadic_log_family() : vlab::dim1_power_family(false, opt.q);
            report = vlab::dim1_odd_representation(family, budget, opt.q);
        } else {
            vlab::fail(vlab::ErrorCode::parse_error, "parity must be 'even' or 'odd'");
        }
    } else {
        vlab::fail(vlab::ErrorCode::parse_error, "unknown check '" + what + "'");
    }
    const std::string summary = "check " + what + ": " + (report.passed ? "passed" : "FAILED") +
                                " (" + std::to_string(report.trials) + " trials, seed " +
                                std::to_string(report.seed) + ")";
    return emit(vlab::to_json(report), report.passed ? 0 : 1, summary);
}

struct FitOptions {
    std::string mu;
    std::string train_path, holdout_path;
    int dim = 2;
    long holdout_count = 20;
    long coeff_bound = 4;
    std::uint64_t seed = 0;
};

int run_fit(const std::string& kind, const FitOptions& opt) {
    const vlab::ValuationHandle mu = vlab::parse_mu_expression(opt.mu);
    std::vector<vlab::Polytope> train;
    if (!opt.train_path.empty()) {
        train = load_polytope_list(opt.train_path);
    } else if (kind == "scalar") {
        train = vlab::default_scalar_train(opt.dim);
    } else if (kind == "vector") {
        train = vlab::default_vector_train(opt.dim);
    } else {
        train = vlab::default_matrix_train(opt.dim);
    }
    std::vector<vlab::Polytope> holdout =
        !opt.holdout_path.empty()
            ? load_polytope_list(opt.holdout_path)
            : vlab::random_holdout({opt.holdout_count, opt.dim, opt.coeff_bound, opt.seed},
                                   opt.holdout_count);
    vlab::FitResult result;
    if (kind == "scalar") {
        result = vlab::fit_scalar_classification(mu, train, holdout);
    } else if (kind == "vector") {
        result = vlab::fit_vector_classification(mu, opt.dim, train, holdout);
    } else if (kind == "matrix") {
        result = vlab::fit_matrix_classification(mu, train, holdout);
    } else {
        vlab::fail(vlab::ErrorCode::parse_error, "unknown fit kind '" + kind + "'");
    }
    const std::string summary =
        "fit " + kind + ": " + (result.residual_ok ? "exact" : "REJECTED") + " (" +
        std::to_string(result.coefficients.size()) + " coefficients)";
    return emit(vlab::to_json(result), result.residual_ok ? 0 : 1, summary);
}

int run_app(int argc, char** argv) {
    CLI::App app{"Exact convex-polytope valuations: compute, generate, check, fit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Evaluate a functional on a polytope");
    std::string compute_target;
    std::string compute_input = "-";
    compute->add_option("target", compute_target, "volume|moment|moment-matrix|euler")->required();
    compute->add_option("--input", compute_input, "polytope JSON file, '-' for stdin");

    // polar
    auto* polar_cmd = app.add_subcommand("polar", "Polar dual of a polytope");
    std::string polar_input = "-";
    polar_cmd->add_option("--input", polar_input, "polytope JSON file, '-' for stdin");

    // generate
    auto* generate = app.add_subcommand("generate", "Emit a polytope from a family");
    std::string gen_family;
    int gen_dim = 2;
    std::uint64_t gen_seed = 0;
    long gen_bound = 4;
    std::string gen_scale = "1", gen_a = "1", gen_b = "1", gen_c = "1", gen_d = "1";
    std::string gen_x, gen_y, gen_base;
    generate->add_option("family", gen_family, "double-pyramid|cross|cube|random")->required();
    generate->add_option("--dim", gen_dim, "ambient dimension")->check(CLI::Range(1, 4));
    generate->add_option("--seed", gen_seed, "random seed")->envname("VALUATION_LAB_SEED");
    generate->add_option("--coeff-bound", gen_bound, "coefficient bound for random data");
    generate->add_option("--scale", gen_scale, "scale for cube/cross");
    generate->add_option("--a", gen_a, "double pyramid: base [-a, b] (n = 2)");
    generate->add_option("--b", gen_b, "double pyramid: base [-a, b] (n = 2)");
    generate->add_option("--c", gen_c, "double pyramid: lower apex height");
    generate->add_option("--d", gen_d, "double pyramid: upper apex height");
    generate->add_option("--x", gen_x, "double pyramid: lower apex slant (comma separated)");
    generate->add_option("--y", gen_y, "double pyramid: upper apex slant (comma separated)");
    generate->add_option("--base", gen_base, "double pyramid: base polytope JSON file (n >= 3)");

    // check
    auto* check = app.add_subcommand("check", "Run a randomized exact check");
    std::string check_what;
    CheckOptions copt;
    check->add_option("what", check_what, "valuation|equivariance|functional-eq|dim1")->required();
    check->add_option("--mu,--target", copt.mu, "valuation expression, e.g. '2*m-5*rot-polar-m'");
    check->add_option("--mode", copt.mode, "equivariance mode");
    check->add_option("--parity", copt.parity, "dim1 parity: even|odd");
    check->add_option("--q", copt.q, "dim1 homogeneity degree (integer)");
    check->add_option("--equation", copt.equation, "functional-eq: inhomogeneous|homogeneous");
    check->add_option("--k", copt.k_text, "functional-eq: quadratic coefficient");
    check->add_option("--ktilde", copt.ktilde_text, "functional-eq: constant coefficient");
    check->add_option("--g-power", copt.g_power, "functional-eq homogeneous: exponent of G");
    check->add_option("--dim", copt.dim, "ambient dimension")->check(CLI::Range(1, 4));
    check->add_option("--trials", copt.trials, "number of trials");
    check->add_option("--coeff-bound", copt.coeff_bound, "coefficient bound for random data");
    check->add_option("--seed", copt.seed, "random seed")->envname("VALUATION_LAB_SEED");

    // fit
    auto* fit = app.add_subcommand("fit", "Fit classification coefficients exactly");
    std::string fit_kind;
    FitOptions fopt;
    fit->add_option("kind", fit_kind, "scalar|vector|matrix")->required();
    fit->add_option("--mu", fopt.mu, "valuation expression")->required();
    fit->add_option("--dim", fopt.dim, "ambient dimension")->check(CLI::Range(2, 4));
    fit->add_option("--train", fopt.train_path, "training polytopes (JSON array file)");
    fit->add_option("--holdout", fopt.holdout_path, "holdout polytopes (JSON array file)");
    fit->add_option("--holdout-count", fopt.holdout_count, "random holdout size");
    fit->add_option("--coeff-bound", fopt.coeff_bound, "coefficient bound for random holdout");
    fit->add_option("--seed", fopt.seed, "random seed")->envname("VALUATION_LAB_SEED");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", "ParseError"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }

    if (compute->parsed()) {
        const vlab::Polytope p = load_polytope(compute_input);
        json value;
        if (compute_target == "volume") {
            value = vlab::to_json(vlab::volume(p));
        } else if (compute_target == "moment") {
            value = vlab::to_json(vlab::moment_vector(p));
        } else if (compute_target == "moment-matrix") {
            value = vlab::to_json(vlab::moment_matrix(p));
        } else if (compute_target == "euler") {
            value = vlab::to_json(vlab::euler_characteristic(p));
        } else {
            vlab::fail(vlab::ErrorCode::parse_error, "unknown functional '" + compute_target + "'");
        }
        return emit(json{{"value", value}}, 0, "compute " + compute_target + ": ok");
    }
    if (polar_cmd->parsed()) {
        return emit(vlab::to_json(vlab::polar(load_polytope(polar_input))), 0, "polar: ok");
    }
    if (generate->parsed()) {
        vlab::Polytope result = [&] {
            if (gen_family == "cube") return vlab::make_cube(gen_dim, parse_rational(gen_scale));
            if (gen_family == "cross")
                return vlab::make_cross_polytope(gen_dim, parse_rational(gen_scale));
            if (gen_family == "random")
                return vlab::random_polytope({1, gen_dim, gen_bound, gen_seed}, 1);
            if (gen_family == "double-pyramid") {
                vlab::Vector x = gen_x.empty() ? vlab::zero_vector(gen_dim - 1) : parse_vector(gen_x);
                vlab::Vector y = gen_y.empty() ? vlab::zero_vector(gen_dim - 1) : parse_vector(gen_y);
                if (gen_dim == 2 && gen_base.empty())
                    return vlab::make_double_pyramid(vlab::DoublePyramidParams::over_base(
                        vlab::make_segment(-parse_rational(gen_a), parse_rational(gen_b)),
                        parse_rational(gen_c), parse_rational(gen_d), x, y));
                const vlab::Polytope base = gen_base.empty()
                                                ? vlab::make_cross_polytope(gen_dim - 1)
                                                : load_polytope(gen_base);
                return vlab::make_double_pyramid(vlab::DoublePyramidParams::over_base(
                    base, parse_rational(gen_c), parse_rational(gen_d), x, y));
            }
            vlab::fail(vlab::ErrorCode::parse_error, "unknown family '" + gen_family + "'");
        }();
        return emit(vlab::to_json(result), 0, "generate " + gen_family + ": ok");
    }
    if (check->parsed()) return run_check(check_what, copt);
    if (fit->parsed()) return run_fit(fit_kind, fopt);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const vlab::Error& e) {
        std::cout << json{{"error", vlab::error_code_name(e.code())}, {"detail", e.what()}}.dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "InternalError"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }
}
