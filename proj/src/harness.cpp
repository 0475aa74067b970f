#include "vlab/harness.hpp"

#include <algorithm>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

const char* equivariance_mode_name(EquivarianceMode mode) {
    switch (mode) {
        case EquivarianceMode::invariant: return "invariant";
        case EquivarianceMode::sl_covariant: return "sl_covariant";
        case EquivarianceMode::sl_contravariant: return "sl_contravariant";
        case EquivarianceMode::vl_covariant: return "vl_covariant";
        case EquivarianceMode::vl_signum_covariant: return "vl_signum_covariant";
        case EquivarianceMode::gl_covariant: return "gl_covariant";
        case EquivarianceMode::gl_contravariant: return "gl_contravariant";
    }
    return "?";
}

EquivarianceMode equivariance_mode_from_string(const std::string& name) {
    for (EquivarianceMode mode : {EquivarianceMode::invariant, EquivarianceMode::sl_covariant,
                                  EquivarianceMode::sl_contravariant, EquivarianceMode::vl_covariant,
                                  EquivarianceMode::vl_signum_covariant, EquivarianceMode::gl_covariant,
                                  EquivarianceMode::gl_contravariant})
        if (name == equivariance_mode_name(mode)) return mode;
    fail(ErrorCode::parse_error, "unknown equivariance mode '" + name + "'");
}

Value expected_equivariant_value(EquivarianceMode mode, const LinearMap& phi, const Value& value) {
    switch (mode) {
        case EquivarianceMode::invariant:
            return value;
        case EquivarianceMode::sl_covariant:
        case EquivarianceMode::vl_covariant:
            return Value(phi.apply(value.vector()));
        case EquivarianceMode::sl_contravariant:
            return Value(phi.transpose_inverse().apply(value.vector()));
        case EquivarianceMode::vl_signum_covariant:
            return Value(vec_scale(phi.det(), phi.apply(value.vector())));
        case EquivarianceMode::gl_covariant:
            return value.transformed(phi).scaled(phi.det().abs());
        case EquivarianceMode::gl_contravariant: {
            const LinearMap inv_t = phi.transpose_inverse();
            return value.transformed(inv_t).scaled(Rational(1) / phi.det().abs());
        }
    }
    fail(ErrorCode::invalid_configuration, "unreachable");
}

TrialRng::TrialRng(std::uint64_t seed, long trial)
    : eng_(splitmix64(splitmix64(seed) ^ splitmix64(static_cast<std::uint64_t>(trial) + 0x51ED270B7A3FCA1DULL))) {}

std::uint64_t TrialRng::next_u64() { return eng_(); }

long TrialRng::uniform_int(long lo, long hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t r = next_u64();
    while (r >= limit) r = next_u64();
    return lo + static_cast<long>(r % range);
}

Rational TrialRng::rational(long bound) {
    return Rational(uniform_int(-bound, bound), uniform_int(1, bound));
}

Rational TrialRng::positive_rational(long bound) {
    return Rational(uniform_int(1, bound), uniform_int(1, bound));
}

Rational TrialRng::unit_fraction() {
    const long q = uniform_int(2, 4);
    return Rational(uniform_int(1, q - 1), q);
}

Vector TrialRng::point(int dim, long bound) {
    Vector v(static_cast<std::size_t>(dim));
    for (auto& c : v) c = rational(bound);
    return v;
}

namespace {

Polytope structured_polytope(TrialRng& rng, int dim, long bound, long variant) {
    const Rational scale = rng.positive_rational(std::max(2L, std::min(bound, 3L)));
    switch (variant % 3) {
        case 0: return make_cube(dim, scale);
        case 1: return make_cross_polytope(dim, scale);
        default: {
            const Polytope base = dim == 2 ? make_segment(-rng.positive_rational(3), rng.positive_rational(3))
                                           : make_cross_polytope(dim - 1, scale);
            return make_double_pyramid(DoublePyramidParams::over_base(
                base, rng.positive_rational(3), rng.positive_rational(3),
                zero_vector(dim - 1), zero_vector(dim - 1)));
        }
    }
}

} // namespace

Polytope random_polytope(TrialRng& rng, int dim, long bound, long trial) {
    // One structured body for every four random hulls.
    if (trial % 5 == 0) return structured_polytope(rng, dim, bound, trial / 5);
    for (int attempt = 0; attempt < 100; ++attempt) {
        const long count = rng.uniform_int(2L * dim, 3L * dim);
        std::vector<Vector> pts;
        pts.reserve(static_cast<std::size_t>(count));
        for (long i = 0; i < count; ++i) pts.push_back(rng.point(dim, bound));
        try {
            Polytope p = Polytope::from_points(dim, pts);
            if (contains_origin_interior(p)) return p;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::degenerate_input) throw;
        }
    }
    fail(ErrorCode::generator_exhausted,
         "no origin-interior polytope found within the retry bound");
}

Polytope random_polytope(const TrialBudget& budget, long trial) {
    TrialRng rng(budget.seed, trial);
    return random_polytope(rng, budget.dimension, budget.coefficient_bound, trial);
}

LinearMap random_unimodular(TrialRng& rng, int dim, int det_sign) {
    if (det_sign == 0) det_sign = rng.uniform_int(0, 1) == 0 ? 1 : -1;
    LinearMap acc = LinearMap::identity(dim);
    const long factors = rng.uniform_int(2, 6);
    for (long f = 0; f < factors; ++f) {
        if (dim >= 2 && rng.uniform_int(0, 2) < 2) {
            // Elementary shear I + lambda E_ij.
            const long i = rng.uniform_int(0, dim - 1);
            long j = rng.uniform_int(0, dim - 2);
            if (j >= i) ++j;
            Rational lambda = Rational(rng.uniform_int(-2, 2), rng.uniform_int(1, 2));
            Matrix m = Matrix::identity(dim);
            m.at(static_cast<int>(i), static_cast<int>(j)) = lambda;
            acc = acc * LinearMap(std::move(m));
        } else {
            // Signed permutation.
            std::vector<int> perm(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) perm[static_cast<std::size_t>(i)] = i;
            for (int i = dim - 1; i > 0; --i)
                std::swap(perm[static_cast<std::size_t>(i)],
                          perm[static_cast<std::size_t>(rng.uniform_int(0, i))]);
            Matrix m(dim, dim);
            for (int i = 0; i < dim; ++i)
                m.at(perm[static_cast<std::size_t>(i)], i) = rng.uniform_int(0, 1) == 0 ? Rational(1) : Rational(-1);
            acc = acc * LinearMap(std::move(m));
        }
    }
    if (acc.det() != Rational(det_sign)) acc = acc * LinearMap::reflect_first(dim);
    return acc;
}

LinearMap random_unimodular(const TrialBudget& budget, int det_sign) {
    TrialRng rng(budget.seed, 0);
    return random_unimodular(rng, budget.dimension, det_sign);
}

LinearMap random_gl(TrialRng& rng, int dim) {
    std::vector<Rational> diag(static_cast<std::size_t>(dim));
    for (auto& d : diag) d = Rational(rng.uniform_int(1, 3), rng.uniform_int(1, 3));
    return random_unimodular(rng, dim, 0) * LinearMap::diagonal(diag);
}

std::pair<Polytope, Polytope> random_slab_split(TrialRng& rng, const Polytope& p) {
    const int dim = p.dim();
    Vector direction;
    do {
        direction = Vector(static_cast<std::size_t>(dim));
        for (auto& c : direction) c = Rational(rng.uniform_int(-2, 2));
    } while (vec_is_zero(direction));
    Rational mn = dot(direction, p.vertices().front());
    Rational mx = mn;
    for (const auto& v : p.vertices()) {
        const Rational d = dot(direction, v);
        if (d < mn) mn = d;
        if (d > mx) mx = d;
    }
    const Rational lo = mn * rng.unit_fraction();
    const Rational hi = mx * rng.unit_fraction();
    return split_by_slab(p, direction, lo, hi);
}

CheckReport check_valuation_identity(const ValuationHandle& mu, const TrialBudget& budget) {
    CheckReport report{true, budget.trials, budget.seed, std::nullopt};
    for (long t = 0; t < budget.trials; ++t) {
        TrialRng rng(budget.seed, t);
        const Polytope p = random_polytope(rng, budget.dimension, budget.coefficient_bound, t);
        const auto [k, l] = random_slab_split(rng, p);
        const Value lhs = mu.evaluate(union_if_convex(k, l)) + mu.evaluate(intersect(k, l));
        const Value rhs = mu.evaluate(k) + mu.evaluate(l);
        if (lhs != rhs) {
            report.passed = false;
            Counterexample cex;
            cex.law = "valuation-identity";
            cex.trial = t;
            cex.polytopes = {{"P", p}, {"K", k}, {"L", l}};
            cex.lhs = lhs;
            cex.rhs = rhs;
            report.counterexample = std::move(cex);
            break;
        }
    }
    return report;
}

namespace {

LinearMap sample_mode_map(EquivarianceMode mode, TrialRng& rng, int dim) {
    switch (mode) {
        case EquivarianceMode::invariant:
        case EquivarianceMode::sl_covariant:
        case EquivarianceMode::sl_contravariant:
            return random_unimodular(rng, dim, 1);
        case EquivarianceMode::vl_covariant:
        case EquivarianceMode::vl_signum_covariant:
            return random_unimodular(rng, dim, 0);
        case EquivarianceMode::gl_covariant:
        case EquivarianceMode::gl_contravariant:
            return random_gl(rng, dim);
    }
    fail(ErrorCode::invalid_configuration, "unreachable");
}

} // namespace

CheckReport check_equivariance(const ValuationHandle& mu, EquivarianceMode mode,
                               const TrialBudget& budget) {
    const bool matrix_mode =
        mode == EquivarianceMode::gl_covariant || mode == EquivarianceMode::gl_contravariant;
    if (mode != EquivarianceMode::invariant) {
        const ValueKind want = matrix_mode ? ValueKind::matrix : ValueKind::vector;
        if (mu.kind != want)
            fail(ErrorCode::invalid_configuration,
                 std::string("mode expects a ") + value_kind_name(want) + " valuation, got " +
                     value_kind_name(mu.kind));
    }
    CheckReport report{true, budget.trials, budget.seed, std::nullopt};
    for (long t = 0; t < budget.trials; ++t) {
        TrialRng rng(budget.seed, t);
        const Polytope p = random_polytope(rng, budget.dimension, budget.coefficient_bound, t);
        const LinearMap phi = sample_mode_map(mode, rng, budget.dimension);
        const Value lhs = mu.evaluate(apply_linear_map(phi, p));
        const Value rhs = expected_equivariant_value(mode, phi, mu.evaluate(p));
        if (lhs != rhs) {
            report.passed = false;
            Counterexample cex;
            cex.law = equivariance_mode_name(mode);
            cex.trial = t;
            cex.polytopes = {{"P", p}};
            cex.map = phi;
            cex.lhs = lhs;
            cex.rhs = rhs;
            report.counterexample = std::move(cex);
            break;
        }
    }
    return report;
}

CheckReport check_homogeneity(const ValuationHandle& mu, const Rational& q,
                              const TrialBudget& budget) {
    if (q.den() != 1)
        fail(ErrorCode::unsupported_exponent, "only integer homogeneity degrees are supported");
    const long degree = static_cast<long>(q.num().get_si());
    CheckReport report{true, budget.trials, budget.seed, std::nullopt};
    for (long t = 0; t < budget.trials; ++t) {
        TrialRng rng(budget.seed, t);
        const Polytope p = random_polytope(rng, budget.dimension, budget.coefficient_bound, t);
        Rational r = rng.positive_rational(budget.coefficient_bound);
        if (r == Rational(1)) r = Rational(1, 2);
        const Value lhs = mu.evaluate(apply_linear_map(LinearMap::scaling(p.dim(), r), p));
        const Value rhs = mu.evaluate(p).scaled(r.pow_int(degree));
        if (lhs != rhs) {
            report.passed = false;
            Counterexample cex;
            cex.law = "homogeneity";
            cex.trial = t;
            cex.polytopes = {{"P", p}};
            cex.scalars = {{"r", r}, {"q", q}};
            cex.lhs = lhs;
            cex.rhs = rhs;
            report.counterexample = std::move(cex);
            break;
        }
    }
    return report;
}

std::pair<Polytope, Polytope> gen_pyramid_cap_pair(const Polytope& base, const Rational& c,
                                                   const Rational& d, const Rational& s,
                                                   const Rational& t, const Vector& x,
                                                   const Vector& y) {
    if (!(Rational(0) < t && t <= d && Rational(0) < s && s <= c))
        fail(ErrorCode::invalid_configuration, "need 0 < t <= d and 0 < s <= c");
    const auto k_params = DoublePyramidParams::over_base(base, c, t, x, y);
    const auto l_params = DoublePyramidParams::over_base(base, s, d, y, y);
    const auto union_params = DoublePyramidParams::over_base(base, c, d, x, y);
    const auto inter_params = DoublePyramidParams::over_base(base, s, t, y, y);
    for (const auto* p : {&k_params, &l_params, &union_params, &inter_params})
        if (!is_double_pyramid(*p))
            fail(ErrorCode::invalid_configuration, "a cap is not a double pyramid over the base");
    Polytope k = make_double_pyramid(k_params);
    Polytope l = make_double_pyramid(l_params);
    try {
        if (union_if_convex(k, l) != make_double_pyramid(union_params))
            fail(ErrorCode::invalid_configuration, "cap union does not match the bracketed form");
    } catch (const Error& e) {
        if (e.code() == ErrorCode::non_convex_union)
            fail(ErrorCode::invalid_configuration, "cap union is not convex");
        throw;
    }
    if (intersect(k, l) != make_double_pyramid(inter_params))
        fail(ErrorCode::invalid_configuration, "cap intersection does not match the bracketed form");
    return {std::move(k), std::move(l)};
}

namespace {

const Polytope& named_polytope(const Counterexample& cex, const std::string& name) {
    for (const auto& [key, poly] : cex.polytopes)
        if (key == name) return poly;
    fail(ErrorCode::invalid_configuration, "counterexample lacks polytope '" + name + "'");
}

const Rational& named_scalar(const Counterexample& cex, const std::string& name) {
    for (const auto& [key, r] : cex.scalars)
        if (key == name) return r;
    fail(ErrorCode::invalid_configuration, "counterexample lacks scalar '" + name + "'");
}

} // namespace

bool replay_counterexample(const ValuationHandle& mu, const Counterexample& cex) {
    if (cex.law == "valuation-identity") {
        const Polytope& k = named_polytope(cex, "K");
        const Polytope& l = named_polytope(cex, "L");
        return mu.evaluate(union_if_convex(k, l)) + mu.evaluate(intersect(k, l)) !=
               mu.evaluate(k) + mu.evaluate(l);
    }
    if (cex.law == "homogeneity") {
        const Polytope& p = named_polytope(cex, "P");
        const Rational& r = named_scalar(cex, "r");
        const Rational& q = named_scalar(cex, "q");
        const Value lhs = mu.evaluate(apply_linear_map(LinearMap::scaling(p.dim(), r), p));
        return lhs != mu.evaluate(p).scaled(r.pow_int(static_cast<long>(q.num().get_si())));
    }
    const EquivarianceMode mode = equivariance_mode_from_string(cex.law);
    if (!cex.map) fail(ErrorCode::invalid_configuration, "equivariance counterexample lacks a map");
    const Polytope& p = named_polytope(cex, "P");
    return mu.evaluate(apply_linear_map(*cex.map, p)) !=
           expected_equivariant_value(mode, *cex.map, mu.evaluate(p));
}

} // namespace vlab
