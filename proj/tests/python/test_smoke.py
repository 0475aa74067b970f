from fractions import Fraction

import pytest

import valuation_lab as vl


P0 = vl.Polytope.from_vertices(2, [["-1", "0"], ["2", "0"], ["0", "1"], ["0", "-1"]])


def test_volume_and_euler():
    assert vl.volume(vl.cube(2)) == "4"
    assert vl.volume(vl.cross_polytope(3)) == "4/3"
    assert vl.volume(P0) == "3"
    assert vl.euler_characteristic(P0) == "1"


def test_hull_discards_interior_points():
    hull = vl.convex_hull(2, [["-1", "0"], ["2", "0"], ["0", "1"], ["0", "-1"], ["1/2", "1/4"]])
    assert hull == P0
    assert len(hull.vertices) == 4


def test_polar_involution_and_box():
    q = vl.polar(P0)
    assert vl.to_fraction(vl.volume(q)) == Fraction(3)
    assert vl.polar(q) == P0
    assert vl.polar(vl.cube(2)) == vl.cross_polytope(2)


def test_moment_vector_exact():
    assert vl.moment_vector(P0) == ["1", "0"]
    assert vl.moment_vector(vl.cube(3)) == ["0", "0", "0"]
    assert vl.to_fraction(vl.moment_vector(vl.polar(P0))) == [Fraction(-3, 4), Fraction(0)]


def test_moment_matrix_exact():
    assert vl.to_fraction(vl.moment_matrix(vl.cube(2))) == [
        [Fraction(4, 3), 0],
        [0, Fraction(4, 3)],
    ]


def test_json_round_trip():
    assert vl.Polytope.from_json(P0.to_json()) == P0


def test_expression_evaluation():
    assert vl.evaluate("2*m-5*rot-polar-m", P0) == ["2", "15/4"]


def test_checks_pass_and_fail():
    ok = vl.check_valuation_identity("V", dim=2, trials=20, seed=7)
    assert ok["passed"] is True
    assert ok["counterexample"] is None

    bad = vl.check_equivariance("m", "vl_signum_covariant", dim=2, trials=40, seed=3)
    assert bad["passed"] is False
    assert bad["counterexample"]["law"] == "vl_signum_covariant"

    hom = vl.check_homogeneity("m", "3", dim=2, trials=15, seed=1)
    assert hom["passed"] is True


def test_fit_recovers_coefficients():
    fit = vl.fit_vector("2*m-5*rot-polar-m", dim=2, holdout=10, seed=11)
    assert fit["residual_ok"] is True
    assert fit["coefficients"] == ["2", "-5"]

    r2 = vl.verify_r2_against_moment(trials=20, seed=5)
    assert r2["residual_ok"] is True
    assert vl.to_fraction(r2["coefficients"]) == [Fraction(1, 6)]


def test_errors_surface_as_exceptions():
    corner = vl.Polytope.from_vertices(2, [["0", "0"], ["1", "0"], ["0", "1"]])
    with pytest.raises(vl.VlabError):
        vl.polar(corner)
    with pytest.raises(vl.VlabError):
        vl.convex_hull(2, [["0", "0"], ["1", "1"], ["2", "2"]])
