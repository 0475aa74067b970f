"""Exact rational convex-polytope valuations.

Thin convenience layer over the compiled core: polytope construction, the
classified functionals (volume, moment vector, moment matrix and their polar
composites), randomized exact checks and classification fits. Every rational
crosses the boundary as an exact string such as "3/4"; ``to_fraction`` turns
those into :class:`fractions.Fraction`.
"""

from fractions import Fraction

from valuation_lab._core import (  # noqa: F401
    Polytope,
    VlabError,
    apply_linear_map,
    check_equivariance,
    check_homogeneity,
    check_valuation_identity,
    contains_origin_interior,
    convex_hull,
    cross_polytope,
    cube,
    double_pyramid,
    euler_characteristic,
    evaluate,
    fit_matrix,
    fit_scalar,
    fit_vector,
    intersect,
    is_double_pyramid,
    moment_matrix,
    moment_vector,
    polar,
    random_polytope,
    union_if_convex,
    verify_r2_against_moment,
    volume,
)

__all__ = [name for name in dir() if not name.startswith("_")]


def to_fraction(value):
    """Exact string (or nested lists of them) to Fraction(s)."""
    if isinstance(value, str):
        return Fraction(value)
    return [to_fraction(item) for item in value]
