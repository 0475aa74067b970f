#pragma once

#include <functional>
#include <string>
#include <utility>

#include "vlab/geometry.hpp"

namespace vlab {

enum class ValueKind { scalar, vector, matrix };

const char* value_kind_name(ValueKind kind);

/// Scalar, vector or matrix result of evaluating a valuation.
class Value {
public:
    Value() : kind_(ValueKind::scalar), scalar_(0) {}
    Value(Rational s) : kind_(ValueKind::scalar), scalar_(std::move(s)) {}
    Value(Vector v) : kind_(ValueKind::vector), vector_(std::move(v)) {}
    Value(Matrix m) : kind_(ValueKind::matrix), matrix_(std::move(m)) {}

    ValueKind kind() const { return kind_; }
    const Rational& scalar() const;
    const Vector& vector() const;
    const Matrix& matrix() const;

    friend bool operator==(const Value& a, const Value& b);
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    friend Value operator+(const Value& a, const Value& b);
    friend Value operator-(const Value& a, const Value& b);

    Value scaled(const Rational& r) const;
    /// phi applied to the value: matrix-vector product for vectors,
    /// identity for scalars, phi M phi^t for matrices.
    Value transformed(const LinearMap& phi) const;

private:
    ValueKind kind_;
    Rational scalar_;
    Vector vector_;
    Matrix matrix_;
};

/// A named black-box valuation under test: kind plus a pure, deterministic
/// evaluation function on polytopes. No hidden state, so handles are safe to
/// share between threads.
struct ValuationHandle {
    ValueKind kind;
    std::string name;
    std::function<Value(const Polytope&)> evaluate;
};

/// Constant 1 on every nonempty convex polytope.
Rational euler_characteristic(const Polytope& p);

/// Integral of x over P, exact via the simplex cover.
Vector moment_vector(const Polytope& p);

/// Integral of x x^t over P: per simplex vol/((n+1)(n+2)) (sum v_i v_i^t + s s^t)
/// with s the vertex sum. The closed form is validated against an independent
/// integration oracle in the test suite before anything else relies on it.
Matrix moment_matrix(const Polytope& p);

/// Counter-clockwise quarter rotation of the plane; WrongDimension unless n = 2.
Vector rotate_quarter(const Vector& v);

/// P |-> base(P*); swaps co- and contravariance.
ValuationHandle polar_composite(const ValuationHandle& base);

// The classified bases.
ValuationHandle basis_valuation_scalar(const Rational& k0, const Rational& k1, const Rational& k2);
ValuationHandle basis_valuation_vector_2d(const Rational& k1, const Rational& k2);

/// diag(-1, 1, ..., 1), the fixed determinant -1 reflection.
LinearMap default_theta(int dim);

/// (mu^+(P), mu^-(P)) with mu^+ = (mu(P) + theta mu(theta^-1 P)) / 2 and
/// mu^- the difference; mu must be vector-kind and theta must have det -1.
/// For SL(n)-covariant mu the split does not depend on the choice of theta.
std::pair<Value, Value> decompose_even_odd(const ValuationHandle& mu, const Polytope& p,
                                           const LinearMap& theta);
std::pair<Value, Value> decompose_even_odd(const ValuationHandle& mu, const Polytope& p);

ValuationHandle even_part(const ValuationHandle& mu, const LinearMap& theta);
ValuationHandle odd_part(const ValuationHandle& mu, const LinearMap& theta);

/// Built-in handles: chi, V, polar-V, m, polar-m, rot-polar-m, M2, polar-M2.
ValuationHandle named_handle(const std::string& name);

/// Rational-linear combinations of the built-in handles, e.g.
/// "2*m-5*rot-polar-m" or "3*chi+1/2*V-polar-V". All terms must share a kind.
ValuationHandle parse_mu_expression(const std::string& expr);

} // namespace vlab
