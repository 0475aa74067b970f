#include "vlab/pyramids.hpp"

#include "vlab/errors.hpp"

namespace vlab {

DoublePyramidParams DoublePyramidParams::planar(const Rational& a, const Rational& b,
                                                const Rational& c, const Rational& d,
                                                const Rational& x, const Rational& y) {
    if (a.sign() <= 0 || b.sign() <= 0)
        fail(ErrorCode::invalid_configuration, "base segment needs a, b > 0");
    return over_base(make_segment(-a, b), c, d, Vector{x}, Vector{y});
}

DoublePyramidParams DoublePyramidParams::over_base(Polytope base, const Rational& c,
                                                   const Rational& d, Vector x, Vector y) {
    if (c.sign() <= 0 || d.sign() <= 0)
        fail(ErrorCode::invalid_configuration, "apex heights need c, d > 0");
    const int dim = base.dim() + 1;
    if (x.size() != static_cast<std::size_t>(dim) - 1 || y.size() != static_cast<std::size_t>(dim) - 1)
        fail(ErrorCode::wrong_dimension, "apex slants must live in the base hyperplane");
    if (!contains_origin_interior(base))
        fail(ErrorCode::origin_not_interior, "double-pyramid base must contain the origin in its interior");
    return DoublePyramidParams{dim, std::move(base), c, d, std::move(x), std::move(y)};
}

Rational DoublePyramidParams::a() const {
    if (dim != 2) fail(ErrorCode::wrong_dimension, "segment endpoints are a planar notion");
    return -base.vertices().front()[0];
}

Rational DoublePyramidParams::b() const {
    if (dim != 2) fail(ErrorCode::wrong_dimension, "segment endpoints are a planar notion");
    return base.vertices().back()[0];
}

Polytope make_double_pyramid(const DoublePyramidParams& p) {
    std::vector<Vector> pts;
    pts.reserve(p.base.vertices().size() + 2);
    for (const auto& v : p.base.vertices()) {
        Vector lifted = v;
        lifted.push_back(Rational(0));
        pts.push_back(std::move(lifted));
    }
    Vector low = vec_scale(-p.c, p.x);
    low.push_back(-p.c);
    Vector high = vec_scale(p.d, p.y);
    high.push_back(p.d);
    pts.push_back(std::move(low));
    pts.push_back(std::move(high));
    return Polytope::from_points(p.dim, pts);
}

bool is_double_pyramid(const DoublePyramidParams& p) {
    const Polytope hull = make_double_pyramid(p);
    try {
        return cross_section_last_zero(hull) == p.base;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::degenerate_input) return false;
        throw;
    }
}

} // namespace vlab
