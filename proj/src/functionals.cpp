#include "vlab/functionals.hpp"

#include <array>
#include <cctype>

#include "vlab/errors.hpp"

namespace vlab {

const char* value_kind_name(ValueKind kind) {
    switch (kind) {
        case ValueKind::scalar: return "scalar";
        case ValueKind::vector: return "vector";
        case ValueKind::matrix: return "matrix";
    }
    return "?";
}

const Rational& Value::scalar() const {
    if (kind_ != ValueKind::scalar) fail(ErrorCode::wrong_dimension, "value is not a scalar");
    return scalar_;
}

const Vector& Value::vector() const {
    if (kind_ != ValueKind::vector) fail(ErrorCode::wrong_dimension, "value is not a vector");
    return vector_;
}

const Matrix& Value::matrix() const {
    if (kind_ != ValueKind::matrix) fail(ErrorCode::wrong_dimension, "value is not a matrix");
    return matrix_;
}

bool operator==(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case ValueKind::scalar: return a.scalar_ == b.scalar_;
        case ValueKind::vector: return a.vector_ == b.vector_;
        case ValueKind::matrix: return a.matrix_ == b.matrix_;
    }
    return false;
}

Value operator+(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) fail(ErrorCode::wrong_dimension, "adding values of different kinds");
    switch (a.kind_) {
        case ValueKind::scalar: return Value(a.scalar_ + b.scalar_);
        case ValueKind::vector: return Value(vec_add(a.vector_, b.vector_));
        case ValueKind::matrix: return Value(a.matrix_ + b.matrix_);
    }
    fail(ErrorCode::wrong_dimension, "unreachable");
}

Value operator-(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) fail(ErrorCode::wrong_dimension, "subtracting values of different kinds");
    switch (a.kind_) {
        case ValueKind::scalar: return Value(a.scalar_ - b.scalar_);
        case ValueKind::vector: return Value(vec_sub(a.vector_, b.vector_));
        case ValueKind::matrix: return Value(a.matrix_ - b.matrix_);
    }
    fail(ErrorCode::wrong_dimension, "unreachable");
}

Value Value::scaled(const Rational& r) const {
    switch (kind_) {
        case ValueKind::scalar: return Value(r * scalar_);
        case ValueKind::vector: return Value(vec_scale(r, vector_));
        case ValueKind::matrix: return Value(mat_scale(r, matrix_));
    }
    fail(ErrorCode::wrong_dimension, "unreachable");
}

Value Value::transformed(const LinearMap& phi) const {
    switch (kind_) {
        case ValueKind::scalar: return *this;
        case ValueKind::vector: return Value(phi.apply(vector_));
        case ValueKind::matrix: return Value(phi.entries() * matrix_ * phi.entries().transposed());
    }
    fail(ErrorCode::wrong_dimension, "unreachable");
}

Rational euler_characteristic(const Polytope&) { return Rational(1); }

Vector moment_vector(const Polytope& p) {
    const int n = p.dim();
    Vector acc = zero_vector(n);
    for (const auto& s : triangulate(p)) {
        Vector sum = zero_vector(n);
        for (const auto& v : s.vertices) sum = vec_add(sum, v);
        const Rational w = simplex_volume(s) / Rational(n + 1);
        acc = vec_add(acc, vec_scale(w, sum));
    }
    return acc;
}

Matrix moment_matrix(const Polytope& p) {
    const int n = p.dim();
    Matrix acc(n, n);
    for (const auto& s : triangulate(p)) {
        Matrix gram(n, n);
        Vector sum = zero_vector(n);
        for (const auto& v : s.vertices) {
            gram = gram + Matrix::outer(v, v);
            sum = vec_add(sum, v);
        }
        gram = gram + Matrix::outer(sum, sum);
        const Rational w = simplex_volume(s) / Rational((n + 1) * (n + 2));
        acc = acc + mat_scale(w, gram);
    }
    return acc;
}

Vector rotate_quarter(const Vector& v) {
    if (v.size() != 2) fail(ErrorCode::wrong_dimension, "quarter rotation is a planar operation");
    return Vector{-v[1], v[0]};
}

ValuationHandle polar_composite(const ValuationHandle& base) {
    return ValuationHandle{
        base.kind,
        base.name + "(polar)",
        [eval = base.evaluate](const Polytope& p) { return eval(polar(p)); },
    };
}

ValuationHandle basis_valuation_scalar(const Rational& k0, const Rational& k1, const Rational& k2) {
    const std::string name =
        k0.str() + "*chi+" + k1.str() + "*V+" + k2.str() + "*polar-V";
    return ValuationHandle{
        ValueKind::scalar,
        name,
        [k0, k1, k2](const Polytope& p) {
            return Value(k0 * euler_characteristic(p) + k1 * volume(p) + k2 * volume(polar(p)));
        },
    };
}

ValuationHandle basis_valuation_vector_2d(const Rational& k1, const Rational& k2) {
    const std::string name = k1.str() + "*m+" + k2.str() + "*rot-polar-m";
    return ValuationHandle{
        ValueKind::vector,
        name,
        [k1, k2](const Polytope& p) {
            if (p.dim() != 2) fail(ErrorCode::wrong_dimension, "planar basis evaluated off the plane");
            const Vector a = vec_scale(k1, moment_vector(p));
            const Vector b = vec_scale(k2, rotate_quarter(moment_vector(polar(p))));
            return Value(vec_add(a, b));
        },
    };
}

LinearMap default_theta(int dim) { return LinearMap::reflect_first(dim); }

std::pair<Value, Value> decompose_even_odd(const ValuationHandle& mu, const Polytope& p,
                                           const LinearMap& theta) {
    if (mu.kind != ValueKind::vector)
        fail(ErrorCode::invalid_configuration, "even/odd split is defined for vector valuations");
    if (theta.det() != Rational(-1))
        fail(ErrorCode::invalid_configuration, "theta must have determinant -1");
    const Value direct = mu.evaluate(p);
    const Value reflected = mu.evaluate(apply_linear_map(theta.inverse(), p)).transformed(theta);
    const Rational half(1, 2);
    return {(direct + reflected).scaled(half), (direct - reflected).scaled(half)};
}

std::pair<Value, Value> decompose_even_odd(const ValuationHandle& mu, const Polytope& p) {
    return decompose_even_odd(mu, p, default_theta(p.dim()));
}

ValuationHandle even_part(const ValuationHandle& mu, const LinearMap& theta) {
    return ValuationHandle{
        ValueKind::vector,
        "even(" + mu.name + ")",
        [mu, theta](const Polytope& p) { return decompose_even_odd(mu, p, theta).first; },
    };
}

ValuationHandle odd_part(const ValuationHandle& mu, const LinearMap& theta) {
    return ValuationHandle{
        ValueKind::vector,
        "odd(" + mu.name + ")",
        [mu, theta](const Polytope& p) { return decompose_even_odd(mu, p, theta).second; },
    };
}

namespace {

ValuationHandle handle_chi() {
    return {ValueKind::scalar, "chi", [](const Polytope& p) { return Value(euler_characteristic(p)); }};
}

ValuationHandle handle_volume() {
    return {ValueKind::scalar, "V", [](const Polytope& p) { return Value(volume(p)); }};
}

ValuationHandle handle_moment() {
    return {ValueKind::vector, "m", [](const Polytope& p) { return Value(moment_vector(p)); }};
}

ValuationHandle handle_moment_matrix() {
    return {ValueKind::matrix, "M2", [](const Polytope& p) { return Value(moment_matrix(p)); }};
}

ValuationHandle handle_rot_polar_moment() {
    return {ValueKind::vector, "rot-polar-m", [](const Polytope& p) {
                if (p.dim() != 2)
                    fail(ErrorCode::wrong_dimension, "rot-polar-m is a planar valuation");
                return Value(rotate_quarter(moment_vector(polar(p))));
            }};
}

struct NamedFactory {
    const char* name;
    ValuationHandle (*make)();
};

ValuationHandle make_polar_volume() {
    auto h = polar_composite(handle_volume());
    h.name = "polar-V";
    return h;
}

ValuationHandle make_polar_moment() {
    auto h = polar_composite(handle_moment());
    h.name = "polar-m";
    return h;
}

ValuationHandle make_polar_moment_matrix() {
    auto h = polar_composite(handle_moment_matrix());
    h.name = "polar-M2";
    return h;
}

// Longest names first so the tokenizer can match greedily.
constexpr std::array<NamedFactory, 8> kNamed = {{
    {"rot-polar-m", handle_rot_polar_moment},
    {"polar-M2", make_polar_moment_matrix},
    {"polar-V", make_polar_volume},
    {"polar-m", make_polar_moment},
    {"chi", handle_chi},
    {"M2", handle_moment_matrix},
    {"V", handle_volume},
    {"m", handle_moment},
}};

} // namespace

ValuationHandle named_handle(const std::string& name) {
    for (const auto& f : kNamed)
        if (name == f.name) return f.make();
    fail(ErrorCode::parse_error, "unknown valuation name '" + name + "'");
}

ValuationHandle parse_mu_expression(const std::string& expr) {
    struct Term {
        Rational coeff;
        ValuationHandle handle;
    };
    std::vector<Term> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    skip_ws();
    if (i == expr.size()) fail(ErrorCode::parse_error, "empty valuation expression");
    while (i < expr.size()) {
        Rational sign = 1;
        if (expr[i] == '+' || expr[i] == '-') {
            if (expr[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!terms.empty()) {
            fail(ErrorCode::parse_error, "expected '+' or '-' between terms");
        }
        Rational coeff = 1;
        if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
            std::size_t j = i;
            while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) ++j;
            if (j < expr.size() && expr[j] == '/') {
                ++j;
                while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) ++j;
            }
            coeff = Rational::from_string(expr.substr(i, j - i));
            i = j;
            skip_ws();
            if (i < expr.size() && expr[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        const NamedFactory* match = nullptr;
        for (const auto& f : kNamed) {
            const std::size_t len = std::char_traits<char>::length(f.name);
            if (expr.compare(i, len, f.name) == 0) {
                match = &f;
                break;
            }
        }
        if (!match) fail(ErrorCode::parse_error, "expected a valuation name at '" + expr.substr(i) + "'");
        i += std::char_traits<char>::length(match->name);
        terms.push_back({sign * coeff, match->make()});
        skip_ws();
    }
    const ValueKind kind = terms.front().handle.kind;
    for (const auto& t : terms)
        if (t.handle.kind != kind)
            fail(ErrorCode::parse_error, "expression mixes scalar/vector/matrix terms");
    return ValuationHandle{
        kind,
        expr,
        [terms](const Polytope& p) {
            Value acc = terms.front().handle.evaluate(p).scaled(terms.front().coeff);
            for (std::size_t k = 1; k < terms.size(); ++k)
                acc = acc + terms[k].handle.evaluate(p).scaled(terms[k].coeff);
            return acc;
        },
    };
}

} // namespace vlab
