#include <doctest.h>

#include "support/oracles.hpp"
#include "vlab/errors.hpp"
#include "vlab/functionals.hpp"
#include "vlab/harness.hpp"

using namespace vlab;

namespace {

Vector v2(long x, long y) { return Vector{Rational(x), Rational(y)}; }

Polytope p0() { return Polytope::from_points(2, {v2(-1, 0), v2(2, 0), v2(0, 1), v2(0, -1)}); }

Polytope box(const oracle::Box& b) {
    const int n = static_cast<int>(b.lo.size());
    std::vector<Vector> pts;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Vector v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? b.hi[static_cast<std::size_t>(i)]
                                                             : b.lo[static_cast<std::size_t>(i)];
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(n, pts);
}

Polytope standard_simplex(int n) {
    std::vector<Vector> pts{zero_vector(n)};
    for (int i = 0; i < n; ++i) pts.push_back(unit_vector(n, i));
    return Polytope::from_points(n, pts);
}

} // namespace

TEST_CASE("euler characteristic is one on every polytope") {
    CHECK(euler_characteristic(make_cube(3)) == Rational(1));
    CHECK(euler_characteristic(make_cross_polytope(2)) == Rational(1));
    CHECK(euler_characteristic(p0()) == Rational(1));
}

TEST_CASE("volume matches the orthant-decomposition oracle for cross-polytopes") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(volume(make_cube(n)) == Rational(2).pow_int(n));
        CHECK(volume(make_cross_polytope(n)) == oracle::cross_polytope_volume(n, Rational(1)));
        CHECK(volume(make_cross_polytope(n, Rational(3, 2))) ==
              oracle::cross_polytope_volume(n, Rational(3, 2)));
    }
    CHECK(volume(make_cross_polytope(2)) == Rational(2));
    CHECK(volume(make_cross_polytope(3)) == Rational(4, 3));
    CHECK(volume(p0()) == Rational(3));
}

TEST_CASE("moment vectors") {
    CHECK(vec_is_zero(moment_vector(make_cube(2))));
    CHECK(vec_is_zero(moment_vector(make_cross_polytope(3))));

    // Triangle-decomposition oracle: areas times centroids.
    CHECK(moment_vector(p0()) == oracle::polygon_moment(p0().vertices()));
    CHECK(moment_vector(p0()) == v2(1, 0));

    const Polytope q = Polytope::from_points(2, {v2(1, 0), v2(-1, 0), v2(0, -1), v2(0, 2)});
    CHECK(moment_vector(q) == oracle::polygon_moment(q.vertices()));
    CHECK(moment_vector(q) == v2(0, 1));

    for (const oracle::Box& b :
         {oracle::Box{Vector{Rational(-1), Rational(0)}, Vector{Rational(2), Rational(3)}},
          oracle::Box{Vector{Rational(1, 2), Rational(-3, 2)}, Vector{Rational(5, 2), Rational(1, 3)}}})
        CHECK(moment_vector(box(b)) == oracle::box_moment(b));
}

TEST_CASE("moment matrix closed form validated against independent integration") {
    // Axis boxes, iterated product integrals.
    for (const oracle::Box& b :
         {oracle::Box{Vector{Rational(-1), Rational(-1)}, Vector{Rational(1), Rational(1)}},
          oracle::Box{Vector{Rational(-1), Rational(0)}, Vector{Rational(2), Rational(3)}},
          oracle::Box{Vector{Rational(-2), Rational(-1), Rational(1, 2)},
                      Vector{Rational(-1, 2), Rational(3), Rational(2)}},
          oracle::Box{Vector{Rational(-1), Rational(-1), Rational(-1), Rational(-1)},
                      Vector{Rational(1), Rational(2), Rational(1, 2), Rational(3)}}})
        CHECK(moment_matrix(box(b)) == oracle::box_moment_matrix(b));

    // Standard simplices, Dirichlet integrals.
    for (int n = 2; n <= 4; ++n)
        CHECK(moment_matrix(standard_simplex(n)) == oracle::standard_simplex_moment_matrix(n));

    CHECK(moment_matrix(make_cube(2)) ==
          mat_scale(Rational(4, 3), Matrix::identity(2)));

    // Orthant-wise oracle for the cross-polytope: 4 copies of the standard
    // simplex integral, so the diagonal is 4 * 2/4! = 1/3.
    Matrix expected(2, 2);
    expected.at(0, 0) = expected.at(1, 1) =
        Rational(4) * oracle::standard_simplex_moment_matrix(2).at(0, 0);
    CHECK(moment_matrix(make_cross_polytope(2)) == expected);
    CHECK(expected.at(0, 0) == Rational(1, 3));
}

TEST_CASE("moment matrix is symmetric positive definite on full-dimensional bodies") {
    for (long trial = 0; trial < 12; ++trial) {
        TrialRng rng(5150, trial);
        const int dim = 2 + static_cast<int>(trial % 3);
        const Polytope p = random_polytope(rng, dim, 3, trial);
        const Matrix m = moment_matrix(p);
        CHECK(m.is_symmetric());
        for (int k = 1; k <= dim; ++k) {
            Matrix leading(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) leading.at(i, j) = m.at(i, j);
            CHECK(determinant(leading) > Rational(0));
        }
    }
}

TEST_CASE("quarter rotation") {
    CHECK(rotate_quarter(v2(1, 0)) == v2(0, 1));
    CHECK(rotate_quarter(v2(0, 1)) == v2(-1, 0));
    CHECK(rotate_quarter(Vector{Rational(-3, 4), Rational(0)}) ==
          Vector{Rational(0), Rational(-3, 4)});
    CHECK_THROWS_AS(rotate_quarter(Vector{Rational(1), Rational(0), Rational(0)}), Error);
}

TEST_CASE("polar composites") {
    const ValuationHandle vol = named_handle("V");
    const ValuationHandle polar_vol = polar_composite(vol);
    CHECK(polar_vol.evaluate(make_cube(2)).scalar() == Rational(2));

    const ValuationHandle polar_m = polar_composite(named_handle("m"));
    CHECK(polar_m.evaluate(p0()).vector() == Vector{Rational(-3, 4), Rational(0)});

    const ValuationHandle twice = polar_composite(polar_vol);
    for (const Polytope& p : {p0(), make_cube(2), make_cross_polytope(2)})
        CHECK(twice.evaluate(p) == vol.evaluate(p));
}

TEST_CASE("scalar basis valuation") {
    const auto mu = basis_valuation_scalar(3, 2, -1);
    CHECK(mu.evaluate(make_cross_polytope(2)).scalar() == Rational(3));
    CHECK(basis_valuation_scalar(1, 0, 0).evaluate(p0()).scalar() == Rational(1));
    CHECK(basis_valuation_scalar(0, 1, 0).evaluate(make_cube(2)).scalar() == Rational(4));
}

TEST_CASE("planar vector basis valuation") {
    CHECK(basis_valuation_vector_2d(1, 0).evaluate(p0()).vector() == v2(1, 0));
    CHECK(basis_valuation_vector_2d(0, 1).evaluate(p0()).vector() ==
          Vector{Rational(0), Rational(-3, 4)});
    for (long k1 = -2; k1 <= 2; ++k1)
        for (long k2 = -2; k2 <= 2; ++k2)
            CHECK(vec_is_zero(
                basis_valuation_vector_2d(k1, k2).evaluate(make_cube(2)).vector()));
    CHECK_THROWS_AS(basis_valuation_vector_2d(1, 1).evaluate(make_cube(3)), Error);
}

TEST_CASE("even/odd decomposition") {
    const ValuationHandle m = named_handle("m");
    const ValuationHandle rot_polar_m = named_handle("rot-polar-m");

    const auto [m_even, m_odd] = decompose_even_odd(m, p0());
    CHECK(m_even == m.evaluate(p0()));
    CHECK(vec_is_zero(m_odd.vector()));

    const auto [r_even, r_odd] = decompose_even_odd(rot_polar_m, p0());
    CHECK(vec_is_zero(r_even.vector()));
    CHECK(r_odd == rot_polar_m.evaluate(p0()));

    const ValuationHandle mixed = parse_mu_expression("m+rot-polar-m");
    const auto [mix_even, mix_odd] = decompose_even_odd(mixed, p0());
    CHECK(mix_even == m.evaluate(p0()));
    CHECK(mix_odd == rot_polar_m.evaluate(p0()));
    CHECK(mix_even + mix_odd == mixed.evaluate(p0()));

    // The split is independent of the choice of determinant -1 map.
    const LinearMap swap = LinearMap::swap_first_two(2);
    const auto [alt_even, alt_odd] = decompose_even_odd(mixed, p0(), swap);
    CHECK(alt_even == mix_even);
    CHECK(alt_odd == mix_odd);

    CHECK_THROWS_AS(decompose_even_odd(named_handle("V"), p0()), Error);
    CHECK_THROWS_AS(decompose_even_odd(m, p0(), LinearMap::identity(2)), Error);
}

TEST_CASE("expression parser") {
    const ValuationHandle mu = parse_mu_expression("2*m-5*rot-polar-m");
    const Vector expect =
        vec_add(vec_scale(Rational(2), moment_vector(p0())),
                vec_scale(Rational(-5), rotate_quarter(moment_vector(polar(p0())))));
    CHECK(mu.evaluate(p0()).vector() == expect);
    CHECK(mu.kind == ValueKind::vector);

    const ValuationHandle scalar = parse_mu_expression("3*chi+2*V-1*polar-V");
    CHECK(scalar.evaluate(make_cross_polytope(2)).scalar() == Rational(3));
    CHECK(parse_mu_expression("1/2*V").evaluate(make_cube(2)).scalar() == Rational(2));
    CHECK(parse_mu_expression("m-polar-m").evaluate(make_cube(2)).vector() == zero_vector(2));
    CHECK(parse_mu_expression("M2").kind == ValueKind::matrix);

    CHECK_THROWS_AS(parse_mu_expression(""), Error);
    CHECK_THROWS_AS(parse_mu_expression("2*m+V"), Error);
    CHECK_THROWS_AS(parse_mu_expression("foo"), Error);
    CHECK_THROWS_AS(parse_mu_expression("2*"), Error);
}
