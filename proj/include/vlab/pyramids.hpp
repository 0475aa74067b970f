#pragma once

#include "vlab/geometry.hpp"

namespace vlab {

/// Parameters of a candidate double pyramid: a base in the hyperplane
/// x_n = 0 (given in its own n-1 coordinates, origin in its interior),
/// apexes -c(x,1) and d(y,1) with c, d > 0 and x, y in R^{n-1}.
/// x = y = 0 is the straight case.
struct DoublePyramidParams {
    int dim;
    Polytope base; // dimension dim-1
    Rational c, d;
    Vector x, y;

    /// n = 2 with base segment [-a, b].
    static DoublePyramidParams planar(const Rational& a, const Rational& b, const Rational& c,
                                      const Rational& d, const Rational& x = Rational(0),
                                      const Rational& y = Rational(0));

    static DoublePyramidParams over_base(Polytope base, const Rational& c, const Rational& d,
                                         Vector x, Vector y);

    bool straight() const { return vec_is_zero(x) && vec_is_zero(y); }
    /// Segment endpoints for n = 2: base = [-a, b].
    Rational a() const;
    Rational b() const;
};

/// Hull of the lifted base and the two apexes. Validity (whether the slice at
/// height zero really is the base) is checked separately.
Polytope make_double_pyramid(const DoublePyramidParams& p);

/// True when hull([base, -c(x,1), d(y,1)]) cap {x_n = 0} equals the base.
bool is_double_pyramid(const DoublePyramidParams& p);

} // namespace vlab
