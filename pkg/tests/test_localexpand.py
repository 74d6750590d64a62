from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from asymdir.curvemodels import FiberPoint, fiber_points, sample_model
from asymdir.errors import (DivisionByZeroSeries, NonConvergentResidue, NonReducedFiber, RamifiedPoint)
from asymdir.localexpand import (RatDifferential, RatFun, branch_expansion, evaluate_on_branch, pullback,
                                 rational_residues, residue, residue_at_point, residue_sum_over_fiber)
from asymdir.numkernel import NumCtx, Poly, UniPoly, parse_polynomial, to_complex

X, Y = Poly.var("x"), Poly.var("y")
ONE = Poly.const(1)


def P(text):
    return parse_polynomial(text)


def coeffs(branch, n):
    return [to_complex(branch.y_series.coefficient(k)) for k in range(n)]


# branches

def test_branch_first_correction_at_x_cubed():
    b = branch_expansion(P("y^3 + 1 + y^2*x^3"), FiberPoint(0, -1), 8)
    assert coeffs(b, 8) == pytest.approx([-1, 0, 0, -1 / 3, 0, 0, -1 / 9, 0], abs=1e-14)


def test_binomial_branch():
    b = branch_expansion(P("y^2 - 1 - x"), FiberPoint(0, 1), 5)
    assert coeffs(b, 5) == pytest.approx([1, 1 / 2, -1 / 8, 1 / 16, -5 / 128], abs=1e-14)


def test_polynomial_branch_is_exact():
    b = branch_expansion(P("y - x^2"), FiberPoint(0, 0), 6)
    assert coeffs(b, 6) == pytest.approx([0, 0, 1, 0, 0, 0], abs=1e-15)


def test_branch_away_from_origin():
    b = branch_expansion(P("y^2 - x"), FiberPoint(4, 2), 4)
    # sqrt(4 + t) = 2 + t/4 - t^2/64 + t^3/512
    assert coeffs(b, 4) == pytest.approx([2, 1 / 4, -1 / 64, 1 / 512], abs=1e-14)


def test_ramified_point_rejected():
    with pytest.raises(RamifiedPoint):
        branch_expansion(P("y^3 - x"), FiberPoint(0, 0), 8)


@pytest.mark.parametrize("genus, family", [(6, "maroni"), (7, "asy"), (5, "maroni")])
def test_branch_satisfies_equation(genus, family):
    m = sample_model(genus, family, 4, 0)
    for p in fiber_points(m, 0):
        b = branch_expansion(m, p, 32)
        res, bound = evaluate_on_branch(m.P, b, with_bound=True)
        for k in range(32):
            assert abs(to_complex(res.coefficient(k))) <= 1e-9 * max(abs(to_complex(bound.coefficient(k))), 1e-300)


def test_high_precision_branch():
    ctx = NumCtx(prec=113)
    b = branch_expansion(P("y^2 - 1 - x"), FiberPoint(0, 1), 4, ctx)
    assert abs(b.y_series.coefficient(2) + Fraction(1, 8)) < 1e-30


# pullbacks and residues

def test_dx_over_x_pullback():
    b = branch_expansion(P("y^3 + 1"), FiberPoint(0, -1), 8)
    s = pullback(RatDifferential.h_dx(RatFun(ONE, X)), b)
    assert s.valuation == -1 and to_complex(s.lead()) == pytest.approx(1)


def test_dlog_pullback():
    b = branch_expansion(P("y^3 + 1"), FiberPoint(0, -1), 8)
    s = pullback(RatDifferential.a_db(RatFun(X), RatFun(ONE, X)), b)
    assert s.valuation == -1 and to_complex(s.lead()) == pytest.approx(-1)


def test_g_squared_pullback():
    b = branch_expansion(P("y^3 + 1"), FiberPoint(0, -1), 8)
    s = pullback(RatDifferential.h_dx(RatFun(ONE, X * Y * Y)), b)
    assert s.valuation == -1 and to_complex(s.lead()) == pytest.approx(1)


@pytest.mark.parametrize("diff, expected", [
    (RatDifferential.h_dx(RatFun(ONE, X)), 1),
    (RatDifferential.a_db(RatFun(X), RatFun(ONE, X)), -1),
    (RatDifferential.h_dx(RatFun(X * X)), 0),
])
def test_basic_residues(diff, expected):
    assert to_complex(residue(diff, FiberPoint(0, -1), P("y^3 + 1"))) == pytest.approx(expected, abs=1e-14)


def test_residue_accepts_branch():
    b = branch_expansion(P("y^3 + 1"), FiberPoint(0, -1), 16)
    assert to_complex(residue(RatDifferential.h_dx(RatFun(ONE, X)), b)) == pytest.approx(1)


DG_OVER_X = RatDifferential.a_db(RatFun(ONE, X), RatFun(ONE, Y))


def test_dg_over_x_vanishes_on_asy6():
    total, per = residue_sum_over_fiber(DG_OVER_X, P("y^3 + y^2*x^3 + 1"), 0)
    assert abs(to_complex(total)) < 1e-14
    assert len(per) == 3


def test_dg_over_x_detects_linear_term():
    # a y x term that the asymptotic family forbids
    total, _ = residue_sum_over_fiber(DG_OVER_X, P("y^3 + y^2*x^3 + x*y + 1"), 0)
    assert to_complex(total) == pytest.approx(-1, abs=1e-12)


def test_dx_over_x_sums_to_degree():
    total, _ = residue_sum_over_fiber(RatDifferential.h_dx(RatFun(ONE, X)), P("y^3 + 1"), 0)
    assert to_complex(total) == pytest.approx(3)


def test_non_reduced_fiber_rejected():
    with pytest.raises(NonReducedFiber):
        residue_sum_over_fiber(DG_OVER_X, P("y^3 - x"), 0)


def test_denominator_vanishing_on_curve():
    curve = P("y^3 + 1")
    with pytest.raises(DivisionByZeroSeries):
        residue(RatDifferential.h_dx(RatFun(ONE, curve)), FiberPoint(0, -1), curve)


def test_single_order_cannot_confirm_stability():
    ctx = NumCtx(series_cap=16)
    diff = RatDifferential.h_dx(RatFun(ONE, X))
    with pytest.raises(NonConvergentResidue):
        residue_at_point(diff, P("y^2 - 1 - x"), FiberPoint(0, 1), ctx)


def test_ratdifferential_json():
    d = RatDifferential.from_json({"form": "A_dB", "A": {"num": "1", "den": "x"}, "B": "1/2*y"})
    assert d.form == "A_dB"
    with pytest.raises(ValueError):
        RatDifferential.from_json({"form": "dx"})


@pytest.mark.parametrize("genus, family", [(6, "maroni"), (5, "maroni"), (7, "maroni")])
def test_series_oracle_matches_closed_form(genus, family):
    for i in range(10):
        m = sample_model(genus, family, 31, i)
        Px, Py = m.P.diff(0), m.P.diff(1)
        closed = sum(complex(Px(p.x0, p.y0)) / (p.y0 ** 2 * complex(Py(p.x0, p.y0))) for p in fiber_points(m, 0))
        total, _ = residue_sum_over_fiber(DG_OVER_X, m, 0)
        assert abs(to_complex(total) - closed) <= 1e-8 * (1 + abs(closed))


def test_order_doubling_is_stable():
    m = sample_model(6, "maroni", 31, 0)
    for p in fiber_points(m, 0):
        r16, _ = residue_at_point(DG_OVER_X, m, p, orders=[16, 32])
        r64, _ = residue_at_point(DG_OVER_X, m, p, orders=[64, 128])
        assert abs(to_complex(r16) - to_complex(r64)) < 1e-10


# rational differentials h(x) dx

def test_rational_residues_known():
    finite, inf = rational_residues(UniPoly([1]), UniPoly([-1, 0, 1]))
    assert [p for p, _ in finite] == pytest.approx([-1, 1])
    assert [complex(r) for _, r in finite] == pytest.approx([-0.5, 0.5])
    assert abs(complex(inf)) < 1e-14


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9)), min_size=1, max_size=4, unique=True),
       st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_residue_theorem(poles, num):
    den = UniPoly([1])
    for a, b in poles:
        den = den * UniPoly([-complex(a, b), 1])
    finite, inf = rational_residues(UniPoly(num), den)
    total = sum(complex(r) for _, r in finite) + complex(inf)
    scale = 1 + sum(abs(complex(r)) for _, r in finite)
    assert abs(total) <= 1e-9 * scale
    assert len(finite) == len(poles)


def test_residue_at_infinity_of_dx_over_x():
    finite, inf = rational_residues(UniPoly([1]), UniPoly([0, 1]))
    assert complex(inf) == pytest.approx(-1)
    assert np.isclose(complex(finite[0][1]), 1)
