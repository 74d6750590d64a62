import json
from fractions import Fraction

import pytest

from asymdir.curvemodels import (ASYMPTOTIC, MARONI, build_family, build_plane_curve, fiber_points,
                                 genus_riemann_hurwitz, is_reduced, model_from_json, ramification_data,
                                 rescale_y, sample_model, sample_params, stream)
from asymdir.errors import DegenerateFiber, InvalidParams, SingularCurve, TangentLine
from asymdir.numkernel import UniPoly, parse_polynomial


def P(text):
    return parse_polynomial(text)


# construction

def test_asy6_with_zero_polynomials():
    m = build_family(6, "asymptotic", {"psi3": [0], "psi7": [1]})
    assert m.P == P("y^3 + y^2*x^3 + 1")
    assert m.genus_tag == 6


def test_same_curve_from_maroni6():
    m = build_family(6, "maroni", {"a": 1, "b": 0, "psi5": [0], "psi7": [1]})
    assert m.P == P("y^3 + y^2*x^3 + 1")


def test_asy5_with_zero_polynomials():
    m = build_family(5, "asy", {"alpha2": [0], "chi2": [0], "psi5": [1]})
    assert m.P == P("y^3*(x^2 - 1) + 1")
    assert m.family == ASYMPTOTIC


def test_maroni7_assembly():
    m = build_family(7, MARONI, {"psi3": [1, 2], "psi6": ["1/2"], "psi9": [0, 0, 3]})
    assert m.P == P("y^3 + y^2*(1 + 2*x) + y/2 + 3*x^2")


@pytest.mark.parametrize("genus, family, params, fragment", [
    (6, "maroni", {"a": 0, "b": 1, "psi5": [1], "psi7": [1]}, "a must be nonzero"),
    (6, "asy", {"psi3": [1], "psi7": [0, 1]}, "psi7(0)"),
    (7, "asy", {"psi2": [1], "psi4": [1], "psi9": [0, 2]}, "psi9(0)"),
    (5, "asy", {"alpha2": [0], "chi2": [0], "psi5": [2]}, "psi5(0)"),
    (6, "asy", {"psi3": [1]}, "missing psi7"),
    (6, "asy", {"psi3": [1], "psi7": [1], "psi5": [1]}, "unexpected psi5"),
    (6, "asy", {"psi3": [1, 1, 1, 1, 1], "psi7": [1]}, "degree 4 > 3"),
    (8, "asy", {}, "no family for genus"),
    (6, "hyperelliptic", {}, "unknown family"),
])
def test_invalid_params(genus, family, params, fragment):
    with pytest.raises(InvalidParams, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        build_family(genus, family, params)


@pytest.mark.parametrize("genus", [5, 6, 7])
def test_asymptotic_structural_zeros(genus):
    for i in range(10):
        c = sample_model(genus, "asy", 11, i).y_coeffs
        c1, c2 = c[1].coeffs, c[2].coeffs
        assert all(v == 0 for v in c1[:2])
        assert all(v == 0 for v in c2[:1])
        if genus == 6:
            assert c[2] == UniPoly([0, 0, 0, 1])


def test_json_roundtrip_and_mismatch():
    m = sample_model(7, "maroni", 5, 2)
    obj = json.loads(json.dumps(m.to_json()))
    assert model_from_json(obj) == m
    obj["P"] = "y^3 + 1"
    with pytest.raises(InvalidParams, match="does not match"):
        model_from_json(obj)


def test_rational_pairs_accepted():
    m = model_from_json({"genus": 6, "family": "asy", "params": {"psi3": [[1, 3]], "psi7": ["1", "0.5"]}})
    assert m.param("psi3") == UniPoly([Fraction(1, 3)])
    assert m.param("psi7") == UniPoly([1, Fraction(1, 2)])


# sampling

def test_sampling_is_reproducible_per_index():
    a = sample_params(6, "maroni", stream(99, 4))
    b = sample_params(6, "maroni", stream(99, 4))
    c = sample_params(6, "maroni", stream(99, 5))
    assert a == b and a != c


def test_sampling_bounds_and_forcing():
    for i in range(20):
        p = sample_params(6, "maroni", stream(1, i), {"psi5": {0: 1}})
        assert p["psi5"][0] == 1
        for v in p["psi7"]:
            assert abs(v.numerator) <= 100 and v.denominator <= 100
        assert p["a"] != 0
    for i in range(20):
        assert sample_model(6, "asy", 1, i).param("psi7")(0) == 1
        assert sample_model(5, "asy", 1, i).param("psi5")(0) == 1


# fibers

def test_fiber_of_pure_cubic():
    pts = fiber_points(P("y^3 + y^2*x^3 + 1"), 0)
    assert [p.y0 for p in pts] == pytest.approx([-1, 0.5 - 0.75 ** 0.5 * 1j, 0.5 + 0.75 ** 0.5 * 1j])
    assert is_reduced(pts)
    assert sum(p.multiplicity for p in pts) == 3


def test_fiber_ignores_terms_vanishing_at_zero():
    a = fiber_points(P("y^3 + y^2*x^3 + y*x^2 + 1"), 0)
    b = fiber_points(P("y^3 + 1"), 0)
    assert [p.y0 for p in a] == pytest.approx([p.y0 for p in b])


def test_degenerate_fiber_genus5():
    m = build_family(5, "asy", {"alpha2": [0], "chi2": [0], "psi5": [1]})
    with pytest.raises(DegenerateFiber):
        fiber_points(m, 1)


def test_non_reduced_fiber_flagged():
    pts = fiber_points(P("y^3 - x"), 0)
    assert not is_reduced(pts)
    assert max(p.multiplicity for p in pts) == 3


@pytest.mark.parametrize("genus, family", [(g, f) for g in (5, 6, 7) for f in ("maroni", "asy")])
def test_fiber_multiplicities_sum_to_three(genus, family):
    m = sample_model(genus, family, 8, 0)
    for x0 in (0, Fraction(1, 3), 2j):
        assert sum(p.multiplicity for p in fiber_points(m, x0)) == 3


# ramification and genus

def test_ramification_total_at_cusp():
    bps = ramification_data(P("y^3 - x"))
    assert len(bps) == 1
    assert bps[0].x_branch == pytest.approx(0)
    assert bps[0].pattern == (3,)


def test_ramification_simple_pair():
    bps = ramification_data(P("y^3 - 3*y + 2*x"))
    assert [b.x_branch for b in bps] == pytest.approx([-1, 1])
    assert all(b.pattern == (2, 1) for b in bps)
    assert [b.ramified[0][0] for b in bps] == pytest.approx([-1, 1])


def test_asy6_model_has_sixteen_finite_branch_points():
    bps = ramification_data(sample_model(6, "asy", 3, 0))
    assert len(bps) == 16
    assert all(b.pattern == (2, 1) for b in bps)


def test_genus_of_rational_and_quartic_models():
    assert genus_riemann_hurwitz(P("y^3 - x"))[0] == 0
    assert genus_riemann_hurwitz(P("y^3 - 3*y + 2*x"))[0] == 0
    # 8 simple finite branch points and a total ramification point over infinity
    g, cert = genus_riemann_hurwitz(P("y^3 - 3*y + x^4"))
    assert g == 3
    assert cert["finite_ramification"] == 8
    assert cert["infinity_contribution"] == 2


@pytest.mark.parametrize("genus, family", [(g, f) for g in (5, 6, 7) for f in ("maroni", "asy")])
def test_family_genus(genus, family):
    for i in range(3):
        g, cert = genus_riemann_hurwitz(sample_model(genus, family, 21, i))
        assert g == genus
        assert cert["total_ramification"] == 2 * genus + 4


def test_genus_certificate_records_infinity_chart():
    _, cert = genus_riemann_hurwitz(sample_model(6, "maroni", 0, 0))
    assert "m" in cert["infinity_chart"]
    assert cert["all_finite_simple"]


# rescaling

def test_rescale_is_same_curve():
    m = sample_model(6, "maroni", 2, 0)
    lam = Fraction(3, 2)
    r = rescale_y(m, lam)
    # P_r(x, y) = lam^3 P(x, y / lam)
    for xv, yv in [(0.3, 1.1), (2, -0.5 + 1j)]:
        assert complex(r.P(xv, yv)) == pytest.approx(complex(lam ** 3 * m.P(xv, yv / lam)))


def test_rescale_rejects_asymptotic():
    with pytest.raises(InvalidParams):
        rescale_y(sample_model(6, "asy", 2, 0), 2)


# plane curves

def test_fermat_quintic_transversal():
    c = build_plane_curve("X^5 + Y^5 + Z^5", 5, ["X", "Y"])
    assert c.smoothness["smooth"]
    assert all(s.transversal and len(s.points) == 5 for s in c.sections)


def test_fermat_sextic_three_lines():
    c = build_plane_curve("X^6 + Y^6 + Z^6", 6, ["X + 2*Y - Z", "3*X - Y + 2*Z", "X + Y + 5*Z"])
    assert len(c.sections) == 3
    assert all(len(s.points) == 6 for s in c.sections)
    for s in c.sections:
        for pt in s.points:
            assert abs(complex(c.F(*pt))) < 1e-10


def test_singular_curve_rejected():
    with pytest.raises(SingularCurve):
        build_plane_curve("X^2*Y^3", 5, [])


def test_tangent_line_rejected():
    # on Y = Z the form reduces to X^5: one point of contact order 5
    with pytest.raises(TangentLine):
        build_plane_curve("X^5 + Y^5 - Z^5", 5, ["Y - Z"])
    c = build_plane_curve("X^5 + Y^5 - Z^5", 5, ["Y - Z"], require_transversal=False)
    assert not c.sections[0].transversal


def test_plane_degree_checked():
    with pytest.raises(InvalidParams):
        build_plane_curve("X^4 + Y^4 + Z^4", 4, [])
    with pytest.raises(InvalidParams):
        build_plane_curve("X^5 + Y^5 + Z", 5, [])
