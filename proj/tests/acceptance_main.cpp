// Acceptance suite: one line per criterion, zero tolerance everywhere.
// Exit status is the number of failed criteria.

#include <functional>
#include <iostream>
#include <vector>

#include "vlab/classify.hpp"
#include "vlab/json_io.hpp"
#include "support/oracles.hpp"

using namespace vlab;

namespace {

constexpr std::uint64_t kSeed = 20260810;

struct Criterion {
    std::string label;
    std::function<bool()> run;
};

bool expect(bool condition, const std::string& what, std::string& log) {
    if (!condition) log += "    failed: " + what + "\n";
    return condition;
}

ValuationHandle volume_squared() {
    return {ValueKind::scalar, "V^2", [](const Polytope& p) {
                const Rational v = volume(p);
                return Value(v * v);
            }};
}

// 1. Exact valuation identity for every functional in the catalogue, with a
//    replayable negative control.
bool criterion_valuation_identity(std::string& log) {
    bool ok = true;
    for (int dim : {2, 3}) {
        for (const char* name : {"chi", "V", "polar-V", "m", "polar-m", "M2", "polar-M2"}) {
            const CheckReport r =
                check_valuation_identity(named_handle(name), {100, dim, 3, kSeed});
            ok &= expect(r.passed, std::string(name) + " n=" + std::to_string(dim), log);
        }
    }
    const CheckReport rot =
        check_valuation_identity(named_handle("rot-polar-m"), {100, 2, 3, kSeed});
    ok &= expect(rot.passed, "rot-polar-m n=2", log);

    const CheckReport control = check_valuation_identity(volume_squared(), {100, 2, 3, kSeed});
    ok &= expect(!control.passed, "V^2 must fail", log);
    ok &= expect(control.counterexample.has_value() &&
                     replay_counterexample(volume_squared(), *control.counterexample),
                 "V^2 counterexample replays", log);
    return ok;
}

// 2. Equivariance catalogue.
bool criterion_equivariance(std::string& log) {
    bool ok = true;
    for (int dim : {2, 3, 4}) {
        ok &= expect(
            check_equivariance(named_handle("m"), EquivarianceMode::sl_covariant, {100, dim, 3, kSeed})
                .passed,
            "m sl_covariant n=" + std::to_string(dim), log);
        ok &= expect(
            check_equivariance(named_handle("m"), EquivarianceMode::vl_covariant, {100, dim, 3, kSeed})
                .passed,
            "m vl_covariant n=" + std::to_string(dim), log);
    }
    for (int dim : {2, 3}) {
        ok &= expect(check_equivariance(named_handle("M2"), EquivarianceMode::gl_covariant,
                                        {100, dim, 3, kSeed})
                         .passed,
                     "M2 gl_covariant n=" + std::to_string(dim), log);
        ok &= expect(check_equivariance(named_handle("polar-m"), EquivarianceMode::sl_contravariant,
                                        {100, dim, 3, kSeed})
                         .passed,
                     "polar-m sl_contravariant n=" + std::to_string(dim), log);
        ok &= expect(check_equivariance(named_handle("polar-M2"), EquivarianceMode::gl_contravariant,
                                        {100, dim, 3, kSeed})
                         .passed,
                     "polar-M2 gl_contravariant n=" + std::to_string(dim), log);
    }
    ok &= expect(check_equivariance(named_handle("rot-polar-m"),
                                    EquivarianceMode::vl_signum_covariant, {100, 2, 3, kSeed})
                     .passed,
                 "rot-polar-m vl_signum_covariant n=2", log);
    return ok;
}

// 3. Polarity laws on slab-split pairs.
bool criterion_polarity(std::string& log) {
    bool ok = true;
    for (int dim : {2, 3}) {
        for (long t = 0; t < 100; ++t) {
            TrialRng rng(kSeed, t);
            const Polytope p = random_polytope(rng, dim, 3, t);
            if (polar(polar(p)) != p) {
                ok = expect(false, "involution n=" + std::to_string(dim), log);
                break;
            }
            const LinearMap phi = random_gl(rng, dim);
            if (polar(apply_linear_map(phi, p)) !=
                apply_linear_map(phi.transpose_inverse(), polar(p))) {
                ok = expect(false, "(phi P)* = phi^-t P* n=" + std::to_string(dim), log);
                break;
            }
            const auto [k, l] = random_slab_split(rng, p);
            if (polar(union_if_convex(k, l)) != intersect(polar(k), polar(l)) ||
                polar(intersect(k, l)) != union_if_convex(polar(k), polar(l))) {
                ok = expect(false, "polar union/intersection exchange n=" + std::to_string(dim), log);
                break;
            }
        }
    }
    return ok;
}

// 4. The planar double-pyramid closed form reproduces the moment vector with
//    a fitted constant that matches the independent oracle.
bool criterion_r2(std::string& log) {
    const FitResult fit = verify_R2_against_moment({60, 2, 3, kSeed});
    bool ok = expect(fit.residual_ok, "exact agreement across the family", log);
    ok &= expect(fit.coefficients.size() == 1, "one fitted constant", log);

    const auto probe = DoublePyramidParams::planar(1, 2, 1, 1);
    const Rational k_oracle = oracle::polygon_moment(make_double_pyramid(probe).vertices())[0] /
                              eval_R2_formula(probe, 1)[0];
    ok &= expect(!fit.coefficients.empty() && fit.coefficients[0] == k_oracle,
                 "fitted constant equals the oracle-derived one", log);

    bool saw_slanted = false;
    for (long t = 1; t < 60; t += 2) {
        TrialRng rng(kSeed, t);
        saw_slanted = saw_slanted || !random_r2_params(rng, 3, true).straight();
    }
    ok &= expect(saw_slanted, "family includes slanted instances", log);
    return ok;
}

// 5. The straight double-pyramid splitting representation.
bool criterion_q2(std::string& log) {
    bool ok = true;
    const Rational f1 = extract_F_from_moment(1), f2 = extract_F_from_moment(2);
    const Rational k = (f2 - f1) / Rational(3);
    const Rational ktilde = f1 - k;
    for (long t = 0; t < 20 && ok; ++t) {
        TrialRng rng(kSeed + 5, t);
        const Rational r = rng.positive_rational(6);
        ok &= expect(extract_F_from_moment(r) == k * r * r + ktilde,
                     "F agrees with k r^2 + ktilde at r=" + r.str(), log);
    }
    for (long t = 0; t < 50 && ok; ++t) {
        TrialRng rng(kSeed + 6, t);
        const Rational a = rng.positive_rational(3), b = rng.positive_rational(3);
        const Rational c = rng.positive_rational(3), d = rng.positive_rational(3);
        const Polytope dp = make_double_pyramid(DoublePyramidParams::planar(a, b, c, d));
        ok &= expect(eval_Q2_formula(a, b, c, d, extract_F_from_moment) == moment_vector(dp),
                     "splitting representation reproduces m", log);
        const auto [lower, upper] = eval_Q2_pyramid_terms(a, b, c, d, extract_F_from_moment);
        ok &= expect(vec_add(lower, upper) == eval_Q2_formula(a, b, c, d, extract_F_from_moment),
                     "pyramid terms sum to the representation", log);
    }
    return ok;
}

// 6. Functional equations.
bool criterion_functional_equations(std::string& log) {
    const Rational f1 = extract_F_from_moment(1), f2 = extract_F_from_moment(2);
    const Rational k = (f2 - f1) / Rational(3);
    const Rational ktilde = f1 - k;
    bool ok = expect(check_inhomogeneous_functional_eq(k, ktilde, {100, 2, 4, kSeed}).passed,
                     "fitted (k, ktilde) solves the inhomogeneous equation", log);
    for (long c = 0; c < 5; ++c) {
        TrialRng rng(kSeed + 7, c);
        const Rational constant = rng.rational(9);
        ok &= expect(check_inhomogeneous_functional_eq(Rational(0), constant, {100, 2, 4, kSeed}).passed,
                     "constant F = " + constant.str(), log);
    }
    ok &= expect(check_homogeneous_solution([](const Rational& u) { return u * u; },
                                            {100, 2, 4, kSeed})
                     .passed,
                 "G(u) = u^2 passes", log);
    ok &= expect(!check_homogeneous_solution([](const Rational& u) { return u; },
                                             {100, 2, 4, kSeed})
                      .passed,
                 "G(u) = u is rejected", log);
    return ok;
}

// 7. Classification fits across all three codomains.
bool criterion_fits(std::string& log) {
    bool ok = true;
    for (long i = 0; i < 10 && ok; ++i) {
        TrialRng rng(kSeed + 8, i);
        const int dim = i % 2 == 0 ? 2 : 3;
        const Rational k0 = rng.rational(6), k1 = rng.rational(6), k2 = rng.rational(6);
        const FitResult fit =
            fit_scalar_classification(basis_valuation_scalar(k0, k1, k2), default_scalar_train(dim),
                                      random_holdout({20, dim, 3, kSeed + i}, 20));
        ok &= expect(fit.residual_ok && fit.coefficients == std::vector<Rational>{k0, k1, k2},
                     "scalar fit " + std::to_string(i), log);
    }
    for (long i = 0; i < 10 && ok; ++i) {
        TrialRng rng(kSeed + 9, i);
        const Rational k1 = rng.rational(6), k2 = rng.rational(6);
        const FitResult fit =
            fit_vector_classification(basis_valuation_vector_2d(k1, k2), 2, default_vector_train(2),
                                      random_holdout({20, 2, 3, kSeed + 40 + i}, 20));
        ok &= expect(fit.residual_ok && fit.coefficients == std::vector<Rational>{k1, k2},
                     "planar vector fit " + std::to_string(i), log);
    }
    for (long i = 0; i < 10 && ok; ++i) {
        TrialRng rng(kSeed + 10, i);
        Rational k = rng.rational(6);
        if (k.is_zero()) k = Rational(1, 2);
        const ValuationHandle mu{ValueKind::vector, "k*m", [k](const Polytope& p) {
                                     return Value(vec_scale(k, moment_vector(p)));
                                 }};
        const FitResult fit = fit_vector_classification(mu, 3, default_vector_train(3),
                                                        random_holdout({20, 3, 3, kSeed + 80 + i}, 20));
        ok &= expect(fit.residual_ok && fit.coefficients == std::vector<Rational>{k},
                     "spatial vector fit " + std::to_string(i), log);
    }
    for (long i = 0; i < 10 && ok; ++i) {
        TrialRng rng(kSeed + 11, i);
        Rational k = rng.rational(6);
        if (k.is_zero()) k = Rational(-2, 3);
        const int dim = i % 2 == 0 ? 2 : 3;
        const ValuationHandle mu{ValueKind::matrix, "k*M2", [k](const Polytope& p) {
                                     return Value(mat_scale(k, moment_matrix(p)));
                                 }};
        const FitResult fit = fit_matrix_classification(mu, default_matrix_train(dim),
                                                        random_holdout({20, dim, 3, kSeed + 120 + i}, 20));
        ok &= expect(fit.residual_ok && fit.coefficients == std::vector<Rational>{k},
                     "matrix fit " + std::to_string(i), log);
    }
    const ValuationHandle perturbed{
        ValueKind::matrix, "M2+V*(E12-E21)", [](const Polytope& p) {
            Matrix m = moment_matrix(p);
            const Rational v = volume(p);
            m.at(0, 1) += v;
            m.at(1, 0) -= v;
            return Value(m);
        }};
    const FitResult rejected = fit_matrix_classification(perturbed, default_matrix_train(2),
                                                         random_holdout({20, 2, 3, kSeed + 160}, 20));
    ok &= expect(!rejected.residual_ok, "antisymmetric perturbation rejected", log);
    return ok;
}

// 8. One-dimensional classifications.
bool criterion_dim1(std::string& log) {
    bool ok = true;
    for (long q = -4; q <= 4 && ok; ++q) {
        ok &= expect(dim1_even_representation(dim1_power_family(true, q), {100, 1, 4, kSeed}, q).passed,
                     "even family q=" + std::to_string(q), log);
        ok &= expect(dim1_odd_representation(dim1_power_family(false, q), {100, 1, 4, kSeed}, q).passed,
                     "odd family q=" + std::to_string(q), log);
    }
    ok &= expect(dim1_odd_representation(dim1_dyadic_log_family(), {100, 1, 6, kSeed}, 0).passed,
                 "dyadic log surrogate representation", log);
    ok &= expect(check_multiplicative_cauchy(
                     [](const Rational& r) { return Rational(dyadic_valuation(r)); },
                     {100, 1, 9, kSeed})
                     .passed,
                 "multiplicative Cauchy surrogate", log);
    return ok;
}

// 9. Even/odd decomposition of planar SL(2)-covariant combinations.
bool criterion_decomposition(std::string& log) {
    bool ok = true;
    const LinearMap theta1 = default_theta(2);
    const LinearMap theta2 = LinearMap::swap_first_two(2);
    for (long i = 0; i < 10 && ok; ++i) {
        TrialRng rng(kSeed + 13, i);
        const Rational k1 = rng.rational(5), k2 = rng.rational(5);
        const ValuationHandle mu = basis_valuation_vector_2d(k1, k2);
        const TrialBudget budget{100, 2, 3, kSeed + 200 + i};
        ok &= expect(check_equivariance(even_part(mu, theta1), EquivarianceMode::vl_covariant, budget)
                         .passed,
                     "mu+ vl_covariant pair " + std::to_string(i), log);
        ok &= expect(check_equivariance(odd_part(mu, theta1), EquivarianceMode::vl_signum_covariant,
                                        budget)
                         .passed,
                     "mu- vl_signum_covariant pair " + std::to_string(i), log);
        for (long t = 0; t < 20 && ok; ++t) {
            TrialRng prng(kSeed + 300 + i, t);
            const Polytope p = random_polytope(prng, 2, 3, t);
            const auto [even1, odd1] = decompose_even_odd(mu, p, theta1);
            const auto [even2, odd2] = decompose_even_odd(mu, p, theta2);
            ok &= expect(even1 + odd1 == mu.evaluate(p), "mu = mu+ + mu-", log);
            ok &= expect(even1 == even2 && odd1 == odd2, "theta independence", log);
        }
    }
    return ok;
}

// 10. Determinism of reports.
bool criterion_determinism(std::string& log) {
    bool ok = true;
    const TrialBudget budget{25, 2, 3, kSeed};
    ok &= expect(to_json(check_valuation_identity(named_handle("m"), budget)).dump() ==
                     to_json(check_valuation_identity(named_handle("m"), budget)).dump(),
                 "valuation report bytes", log);
    ok &= expect(to_json(check_valuation_identity(volume_squared(), budget)).dump() ==
                     to_json(check_valuation_identity(volume_squared(), budget)).dump(),
                 "failing report bytes", log);
    ok &= expect(
        to_json(check_equivariance(named_handle("m"), EquivarianceMode::sl_covariant, budget)).dump() ==
            to_json(check_equivariance(named_handle("m"), EquivarianceMode::sl_covariant, budget))
                .dump(),
        "equivariance report bytes", log);
    const FitResult f1 = verify_R2_against_moment({30, 2, 3, kSeed});
    const FitResult f2 = verify_R2_against_moment({30, 2, 3, kSeed});
    ok &= expect(to_json(f1).dump() == to_json(f2).dump(), "fit report bytes", log);
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 valuation identity, exact, with replayable negative control",
         [] { std::string log; const bool ok = criterion_valuation_identity(log); std::cerr << log; return ok; }},
        {"2 equivariance suite", [] { std::string log; const bool ok = criterion_equivariance(log); std::cerr << log; return ok; }},
        {"3 polarity laws", [] { std::string log; const bool ok = criterion_polarity(log); std::cerr << log; return ok; }},
        {"4 planar double-pyramid closed form", [] { std::string log; const bool ok = criterion_r2(log); std::cerr << log; return ok; }},
        {"5 straight double-pyramid splitting", [] { std::string log; const bool ok = criterion_q2(log); std::cerr << log; return ok; }},
        {"6 functional equations", [] { std::string log; const bool ok = criterion_functional_equations(log); std::cerr << log; return ok; }},
        {"7 classification fits", [] { std::string log; const bool ok = criterion_fits(log); std::cerr << log; return ok; }},
        {"8 one-dimensional classifications", [] { std::string log; const bool ok = criterion_dim1(log); std::cerr << log; return ok; }},
        {"9 even/odd decomposition", [] { std::string log; const bool ok = criterion_decomposition(log); std::cerr << log; return ok; }},
        {"10 deterministic reports", [] { std::string log; const bool ok = criterion_determinism(log); std::cerr << log; return ok; }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cerr << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.label << std::endl;
        if (!ok) ++failures;
    }
    return failures;
}
