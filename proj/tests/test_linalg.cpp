#include <doctest.h>

#include "vlab/errors.hpp"
#include "vlab/linalg.hpp"

using namespace vlab;

namespace {

Matrix mat2(long a, long b, long c, long d) {
    Matrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

} // namespace

TEST_CASE("determinants") {
    CHECK(determinant(Matrix(0, 0)) == Rational(1));
    CHECK(determinant(mat2(1, 2, 3, 4)) == Rational(-2));
    CHECK(determinant(Matrix::identity(4)) == Rational(1));
    Matrix m(3, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = 1;
    m.at(1, 1) = Rational(2);
    m.at(1, 2) = Rational(3);
    m.at(2, 0) = Rational(-1);
    m.at(2, 2) = Rational(1, 3);
    // Cofactor expansion along the first column: (1/2)(2/3) + (-1)(3) = -8/3.
    CHECK(determinant(m) == Rational(-8, 3));
}

TEST_CASE("inverse and solve") {
    const Matrix m = mat2(1, 2, 3, 4);
    const Matrix inv = inverse(m).value();
    CHECK(m * inv == Matrix::identity(2));
    CHECK(!inverse(mat2(1, 2, 2, 4)).has_value());
    const Vector x = solve(m, Vector{Rational(5), Rational(6)}).value();
    CHECK(mat_vec(m, x) == Vector{Rational(5), Rational(6)});
}

TEST_CASE("rank") {
    CHECK(rank_of_rows({Vector{Rational(1), Rational(0)}, Vector{Rational(0), Rational(1)}}) == 2);
    CHECK(rank_of_rows({Vector{Rational(1), Rational(2)}, Vector{Rational(2), Rational(4)}}) == 1);
    CHECK(rank_of_rows({Vector{Rational(0), Rational(0)}}) == 0);
    CHECK(rank_of_rows({Vector{Rational(1), Rational(2), Rational(3)},
                        Vector{Rational(0), Rational(1), Rational(1)},
                        Vector{Rational(1), Rational(3), Rational(4)}}) == 2);
}

TEST_CASE("linear map caches the exact determinant and composes") {
    const LinearMap shear = [] {
        Matrix m = Matrix::identity(2);
        m.at(0, 1) = Rational(7, 3);
        return LinearMap(m);
    }();
    CHECK(shear.det() == Rational(1));
    const LinearMap d = LinearMap::diagonal({Rational(2), Rational(1, 2)});
    CHECK(d.det() == Rational(1));
    CHECK((shear * d).det() == Rational(1));
    CHECK(LinearMap::reflect_first(3).det() == Rational(-1));
    CHECK(LinearMap::swap_first_two(3).det() == Rational(-1));

    // (phi psi)^{-t} = phi^{-t} psi^{-t}
    const LinearMap lhs = (shear * d).transpose_inverse();
    const LinearMap rhs = shear.transpose_inverse() * d.transpose_inverse();
    CHECK(lhs == rhs);

    const LinearMap singular = LinearMap(mat2(1, 2, 2, 4));
    CHECK(!singular.invertible());
    CHECK_THROWS_AS(singular.inverse(), Error);
    CHECK_THROWS_AS(singular.transpose_inverse(), Error);
}

TEST_CASE("vector helpers") {
    const Vector a{Rational(1), Rational(2)};
    const Vector b{Rational(3), Rational(-1)};
    CHECK(dot(a, b) == Rational(1));
    CHECK(vec_add(a, b) == Vector{Rational(4), Rational(1)});
    CHECK(vec_scale(Rational(1, 2), a) == Vector{Rational(1, 2), Rational(1)});
    CHECK(lex_compare(a, b) < 0);
    CHECK(vec_is_zero(zero_vector(3)));
    CHECK(unit_vector(3, 1) == Vector{Rational(0), Rational(1), Rational(0)});
}
